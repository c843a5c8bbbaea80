"""Plain-text, LaTeX and JSON renderings of polynomials and forms.

The plain polynomial syntax is the one accepted by :func:`parsing.parse_expr`,
and the JSON document is the one accepted by :func:`parsing.parse_form`.
"""

import json
from fractions import Fraction

__all__ = [
    "plain_coord",
    "plain_poly",
    "plain_scalar",
    "plain_vector",
    "latex_poly",
    "latex_scalar",
    "latex_vector",
    "form_to_json",
    "form_to_document",
    "render",
]


def format_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def plain_coord(c):
    return f"u[{c.alpha};{' '.join(map(str, c.index.directions()))}]"


def latex_coord(c):
    dirs = "".join(map(str, c.index.directions()))
    return f"u^{{{c.alpha}}}" + (f"_{{{dirs}}}" if dirs else "")


def latex_rational(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else rf"\tfrac{{{c.numerator}}}{{{c.denominator}}}"


def _signed_terms(p, coord_fmt, times, power_fmt, num=format_rational):
    out = []
    for mono, c in p.sorted_terms():
        factors = []
        for x in sorted(set(mono)):
            e = mono.count(x)
            factors.append(power_fmt(coord_fmt(x), e) if e > 1 else coord_fmt(x))
        body = times.join(factors)
        c = Fraction(c)
        if not body:
            term = num(abs(c))
        elif abs(c) == 1:
            term = body
        else:
            term = f"{num(abs(c))}{times}{body}"
        out.append(("-" if c < 0 else "+", term))
    return out


def _join(signed):
    if not signed:
        return "0"
    s = ("-" if signed[0][0] == "-" else "") + signed[0][1]
    for sign, term in signed[1:]:
        s += f" {sign} {term}"
    return s


def plain_poly(p):
    return _join(_signed_terms(p, plain_coord, "*", lambda b, e: f"{b}^{e}"))


def latex_poly(p):
    return _join(_signed_terms(p, latex_coord, " ", _latex_power, latex_rational))


def _latex_power(base, e):
    # a subscripted coordinate needs braces before it can take an exponent
    return f"{{{base}}}^{{{e}}}"


def _coefficient_prefix(poly, text, sep):
    """Prefix for a wedge monomial; returns (sign, prefix)."""
    if len(poly.terms) == 1:
        ((mono, c),) = poly.terms.items()
        if not mono and abs(c) == 1:
            return ("-" if c < 0 else "+"), ""
        if text.startswith("-"):
            return "-", text[1:] + sep
        return "+", text + sep
    return "+", f"({text}){sep}"


def _scalar(form, coord_fmt, poly_fmt, wedge_sym, sep):
    signed = []
    for labels, poly in form.by_label().items():
        text = poly_fmt(poly)
        if not labels:
            signed.append(("-", text[1:]) if text.startswith("-") else ("+", text))
            continue
        wedge_part = wedge_sym.join("d" + coord_fmt(x) for x in labels)
        sign, prefix = _coefficient_prefix(poly, text, sep)
        signed.append((sign, prefix + wedge_part))
    return signed


def plain_scalar(form):
    return _join(_scalar(form, plain_coord, plain_poly, "^", "*"))


def latex_scalar(form):
    return _join(_scalar(form, latex_coord, latex_poly, r"\wedge ", r"\,"))


def _vector(form, coord_fmt, poly_fmt, wedge_sym, sep, dt_fmt, tensor):
    if form.is_zero:
        return "0"
    signed = []
    for dt in sorted(form.components):
        parts = _scalar(form.components[dt], coord_fmt, poly_fmt, wedge_sym, sep)
        if not dt:
            signed.extend(parts)
        elif len(parts) == 1:
            signed.append((parts[0][0], f"{parts[0][1]}{tensor}{dt_fmt(dt)}"))
        else:
            signed.append(("+", f"({_join(parts)}){tensor}{dt_fmt(dt)}"))
    return _join(signed)


def plain_vector(form):
    return _vector(
        form, plain_coord, plain_poly, "^", "*", lambda dt: "dt[" + " ".join(map(str, dt)) + "]", " (x) "
    )


def latex_vector(form):
    return _vector(
        form, latex_coord, latex_poly, r"\wedge ", r"\,",
        lambda dt: r"\wedge ".join(f"dt^{{{i}}}" for i in dt), r"\otimes ",
    )


def form_to_document(form):
    """The canonical JSON-ready dictionary for a vector-valued form."""
    components = []
    for dt in sorted(form.components):
        terms = []
        for labels, poly in form.components[dt].by_label().items():
            terms.append({
                "coeff": plain_poly(poly),
                "du": [[x.alpha, list(x.index)] for x in labels],
            })
        components.append({"dt": list(dt), "terms": terms})
    return {
        "m": form.ctx.m,
        "n": form.ctx.n,
        "r": form.degree,
        "s": form.covalence,
        "components": components,
    }


def form_to_json(form):
    return json.dumps(form_to_document(form))


def render(x, fmt="plain"):
    """Render a PolyExpr, ScalarForm or VectorForm as plain text, LaTeX or JSON."""
    from .forms import ScalarForm, VectorForm
    from .symexpr import PolyExpr

    if fmt not in ("plain", "latex", "json"):
        raise ValueError(f"unknown format {fmt!r}")
    if isinstance(x, PolyExpr):
        if fmt == "json":
            return json.dumps([
                {"coeff": format_rational(c), "monomial": [[y.alpha, list(y.index)] for y in mono]}
                for mono, c in x.sorted_terms()
            ])
        return plain_poly(x) if fmt == "plain" else latex_poly(x)
    if isinstance(x, ScalarForm):
        if fmt == "json":
            return form_to_json(VectorForm.tensor(x, ()))
        return plain_scalar(x) if fmt == "plain" else latex_scalar(x)
    if isinstance(x, VectorForm):
        if fmt == "json":
            return form_to_json(x)
        return plain_vector(x) if fmt == "plain" else latex_vector(x)
    raise TypeError(f"cannot render {type(x).__name__}")
