"""Regenerate src/wavechange/_coefficients.py.

Run from the repository root:  python scripts/generate_coefficients.py
Takes a couple of minutes (the coiflet searches dominate).
"""

from pathlib import Path

import mpmath as mp

from wavechange.filter_design import (
    coiflet_refine,
    coiflet_search,
    daubechies_scaling,
    least_asymmetric_scaling,
)

DIGITS = 30
OUT = Path(__file__).resolve().parents[1] / "src" / "wavechange" / "_coefficients.py"


def fmt(values):
    lines = [f"        {mp.nstr(v, DIGITS, min_fixed=-1, max_fixed=1)}," for v in values]
    return "\n".join(lines)


def main():
    tables = {}
    for n in range(2, 11):
        tables[("daubechies", n)] = daubechies_scaling(n)
        print("db", n, flush=True)
    for length in range(8, 21, 2):
        tables[("least_asymmetric", length)] = least_asymmetric_scaling(length)
        print("la", length, flush=True)
    for k in range(1, 6):
        tables[("coiflet", k)] = coiflet_refine(coiflet_search(k), k)
        print("coif", k, flush=True)

    parts = [
        '"""Scaling-filter coefficients (generated by scripts/generate_coefficients.py; do not edit)."""',
        "",
        "SCALING_FILTERS = {",
    ]
    for (family, order), g in tables.items():
        parts.append(f'    ("{family}", {order}): (')
        parts.append(fmt(g))
        parts.append("    ),")
    parts.append("}")
    OUT.write_text("\n".join(parts) + "\n")


if __name__ == "__main__":
    main()
