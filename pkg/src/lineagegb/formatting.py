"""Text renderings: polynomials, lineage-table listings, DOT genealogy."""

from __future__ import annotations

from .lineage import display_lineage, is_leaf, lineage_to_string
from .poly import Poly


def render_poly(p: Poly) -> str:
    """Canonical text form: descending terms, '^' exponents, '*' separators,
    unit coefficients omitted on non-constant terms."""
    if p.is_zero():
        return "0"
    names = p.ring.variables
    out = []
    for coeff, mono in p.terms:
        body = "*".join(
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, mono)
            if e
        )
        magnitude = abs(coeff)
        if not body:
            chunk = str(magnitude)
        elif magnitude == 1:
            chunk = body
        else:
            chunk = f"{magnitude}*{body}"
        sign = "-" if coeff < 0 else "+"
        if not out:
            out.append(chunk if sign == "+" else "-" + chunk)
        else:
            out.append(sign + chunk)
    return "".join(out)


def format_lineage_table(table) -> str:
    """One line per key in canonical order: 'KEY => VALUE' with display keys."""
    lines = []
    for key in table.canonical_keys():
        value = table.entries[key]
        rendered = "null" if value is None else render_poly(value)
        lines.append(f"{display_lineage(key)} => {rendered}")
    return "\n".join(lines)


def emit_dot(table) -> str:
    """Directed genealogy graph: a node per key, edges parent -> pair key."""
    lines = ["digraph lineage {"]
    keys = table.canonical_keys()
    for key in keys:
        label = display_lineage(key)
        if table.entries[key] is None:
            label += " = null"
        lines.append(f'  "{lineage_to_string(key)}" [label="{label}"];')
    for key in keys:
        if is_leaf(key):
            continue
        for parent in key:
            lines.append(
                f'  "{lineage_to_string(parent)}" -> "{lineage_to_string(key)}";'
            )
    lines.append("}")
    return "\n".join(lines)
