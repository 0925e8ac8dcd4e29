"""Published survey values, kept for side-by-side comparison with computed ones.

Each per-space table maps ``m`` to ``(max #GBs, original bound, modified bound)``.
Some published cells disagree with each other or with the bound formulas;
comparisons report those cells instead of trusting them.
"""

SPACE_TABLES = {
    # (p, n)
    (2, 2): {0: (1, 1, 1), 1: (1, 1, 1), 2: (2, 3, 3), 3: (1, 4, 1), 4: (1, 6, 1)},
    (2, 3): {0: (1, 1, 1), 1: (1, 1, 1), 2: (3, 8, 8), 3: (3, 27, 11), 4: (3, 64, 23),
             5: (3, 125, 11), 6: (3, 216, 8), 7: (1, 343, 1), 8: (1, 512, 1)},
    (2, 4): {1: (1, 1, 1), 2: (4, 28, 28), 3: (5, 195, 195), 4: (6, 776, 28),
             5: (13, 2260, 48), 6: (12, 5430, 74), 7: (13, 11400, 471), 8: (9, 19300, 147)},
    (3, 2): {1: (1, 1, 1), 2: (2, 3, 3), 3: (2, 4, 4), 4: (2, 6, 5), 5: (2, 9, 5),
             6: (2, 11, 4), 7: (2, 13, 3), 8: (1, 16, 1), 9: (1, 19, 1)},
}

# Original-bound cells printed with three significant figures.
ROUNDED_ORIGINAL = {(2, 4): {5, 6, 7, 8}}

# m = 4 points over Z_2, by number of variables n.
FOUR_POINT_TABLE = {2: (1, 6, 1), 3: (3, 64, 27), 4: (5, 776, 147), 5: (8, 10321, 1024)}

# Z_2^4: m -> (max #GBs, |S_unique|, |S_add|)
AUGMENTATION_TABLE = {
    2: (4, 5, 3), 3: (5, 5, 2), 4: (6, 8, 4), 5: (13, 11, 6), 6: (12, 11, 5), 7: (13, 11, 4),
    8: (9, 11, 3), 9: (13, 12, 3), 10: (12, 15, 5), 11: (13, 15, 4), 12: (6, 15, 3),
    13: (5, 15, 2), 14: (4, 15, 1),
}

COLUMNS = ("actual_max", "original_bound", "modified_bound")


def _matches(published, computed, approximate: bool) -> bool:
    if not approximate:
        return published == computed
    # three significant figures
    return abs(published - computed) <= 0.005 * abs(computed)


def compare_row(p: int, n: int, m: int, computed: dict) -> list:
    """Discrepancies between one computed survey row and every published cell for it."""
    out = []
    sources = []
    table = SPACE_TABLES.get((p, n))
    if table and m in table:
        sources.append((f"table Z_{p}^{n}", table[m], ROUNDED_ORIGINAL.get((p, n), set())))
    if p == 2 and m == 4 and n in FOUR_POINT_TABLE:
        sources.append(("table m=4, p=2", FOUR_POINT_TABLE[n], set()))
    for name, values, rounded in sources:
        for col, published in zip(COLUMNS, values):
            value = computed.get(col)
            if value is None:
                continue
            approx = col == "original_bound" and m in rounded
            if not _matches(published, value, approx):
                out.append({"source": name, "m": m, "column": col,
                            "published": published, "computed": value})
    return out
