"""Reference lists of central types by minimal eigenvalue, as canonical
strings. Orthogonal GF(2) groups map to PR3 and symplectic ones to PR4.
Omega5+(3) and O6-(2) are one group, listed once under PR3."""

INDIVIDUALS = {
    -1: set(),
    -2: set(),
    -4: {
        "PR3(h=0,m=3,eps=-)", "PR3(h=0,m=4,eps=+)", "PR4(h=0,m=3)",
        "PR5(h=0,m=5,eps=-)", "PR5(h=0,m=6,eps=-)",
        "PR6(h=1,m=3)", "PR6(h=0,m=4)", "PR6(h=0,m=5)",
    },
    -8: {
        "PR3(h=1,m=3,eps=-)", "PR3(h=1,m=4,eps=+)", "PR3(h=0,m=4,eps=-)", "PR3(h=0,m=5,eps=+)",
        "PR4(h=1,m=3)", "PR4(h=0,m=4)",
    },
    -10: {
        "PR5(h=1,m=5,eps=-)", "PR5(h=1,m=5,eps=+)", "PR5(h=1,m=6,eps=-)", "PR5(h=0,m=6,eps=+)",
        "PR5(h=0,m=7,eps=-)", "PR5(h=0,m=7,eps=+)", "PR5(h=0,m=8,eps=-)",
        "PR9(h=1)", "PR10(h=1)",
    },
    -16: {
        "PR4(h=3,m=3)", "PR4(h=2,m=4)", "PR4(h=1,m=5)", "PR4(h=0,m=6)",
        "PR3(h=3,m=3,eps=-)", "PR3(h=3,m=4,eps=+)", "PR3(h=2,m=4,eps=-)", "PR3(h=2,m=5,eps=+)",
        "PR3(h=1,m=5,eps=-)", "PR3(h=1,m=6,eps=+)", "PR3(h=0,m=6,eps=-)", "PR3(h=0,m=7,eps=+)",
        "PR6(h=2,m=3)", "PR6(h=1,m=4)", "PR6(h=1,m=5)", "PR6(h=0,m=6)", "PR6(h=0,m=7)",
        "PR8(h=1)",
    },
    -28: {
        "PR5(h=2,m=5,eps=-)", "PR5(h=2,m=5,eps=+)", "PR5(h=2,m=6,eps=-)", "PR5(h=1,m=6,eps=+)",
        "PR5(h=1,m=7,eps=-)", "PR5(h=1,m=7,eps=+)", "PR5(h=1,m=8,eps=-)", "PR5(h=0,m=8,eps=+)",
        "PR5(h=0,m=9,eps=-)", "PR5(h=0,m=9,eps=+)", "PR5(h=0,m=10,eps=-)",
        "PR9(h=2)", "PR10(h=2)", "PR11(h=1)", "PR12(h=1)",
        "PR13", "PR14", "PR15", "PR16",
    },
    # -32 is given only schematically: GF(2) orthogonal and symplectic lifts
    -64: {
        "PR4(h=4,m=3)", "PR4(h=3,m=4)", "PR4(h=2,m=5)", "PR4(h=1,m=6)", "PR4(h=0,m=7)",
        "PR3(h=4,m=3,eps=-)", "PR3(h=4,m=4,eps=+)", "PR3(h=3,m=4,eps=-)", "PR3(h=3,m=5,eps=+)",
        "PR3(h=2,m=5,eps=-)", "PR3(h=2,m=6,eps=+)", "PR3(h=1,m=6,eps=-)", "PR3(h=1,m=7,eps=+)",
        "PR3(h=0,m=7,eps=-)", "PR3(h=0,m=8,eps=+)",
        "PR6(h=3,m=3)", "PR6(h=2,m=4)", "PR6(h=2,m=5)", "PR6(h=1,m=6)", "PR6(h=1,m=7)",
        "PR6(h=0,m=8)", "PR6(h=0,m=9)",
        "PR7a", "PR7d", "PR8(h=2)", "PR17", "PR18", "PR19",
    },
}

SCHEMATIC = {-32: ("PR3", "PR4")}

FAMILIES = {
    -1: set(),
    -2: {"PR2a(h=0)"},
    -4: {"PR2a(h=1)", "PR2b(h=1)"},
    -8: {"PR2a(h=2)"},
    -10: {"PR2b(h=2)", "PR2c(h=1)"},
    -16: {"PR2a(h=3)", "PR2d(h=1)"},
    -28: {"PR2b(h=3)", "PR2c(h=2)"},
    -32: {"PR2a(h=4)"},
    -64: {"PR2a(h=5)", "PR2d(h=2)"},
}

COUNTS = {8: (4, 14), 64: (13, 90)}

MATSUO_QUARTER = {
    "moufang": ("PR1(h=1)",),
    "families": {"PR2a(h=0)", "PR2a(h=1)", "PR2a(h=2)"},
    "individuals": {
        "PR3(h=0,m=3,eps=-)", "PR3(h=0,m=4,eps=+)", "PR4(h=0,m=3)",
        "PR3(h=1,m=3,eps=-)", "PR3(h=0,m=4,eps=-)", "PR3(h=1,m=4,eps=+)", "PR3(h=0,m=5,eps=+)",
        "PR4(h=1,m=3)", "PR4(h=0,m=4)",
    },
}
