"""
Built-in example packings.

The six cubic rod packings of O'Keeffe et al. are not shipped here: their
coordinates have to be taken from the crystallographic literature
(O'Keeffe, Plevert, Teshima, Watanabe, Ogama, "The invariant cubic rod
(cylinder) packings", Acta Cryst. A57 (2001)) and entered as packing files.
"""

CATALOG = {
    "single": {
        "rods": [
            {"direction": [1, 0, 0], "basepoint": ["0", "0", "0"]},
        ],
    },
    "parallel_pair": {
        "rods": [
            {"direction": [1, 0, 0], "basepoint": ["0", "0", "0"]},
            {"direction": [1, 0, 0], "basepoint": ["0", "0", "1/2"]},
        ],
    },
    "axes2": {
        "rods": [
            {"direction": [1, 0, 0], "basepoint": ["0", "0", "0"]},
            {"direction": [0, 1, 0], "basepoint": ["0", "0", "1/2"]},
        ],
    },
    "axes3": {
        "rods": [
            {"direction": [1, 0, 0], "basepoint": ["0", "0", "0"]},
            {"direction": [0, 1, 0], "basepoint": ["1/2", "0", "1/2"]},
            {"direction": [0, 0, 1], "basepoint": ["1/4", "1/2", "0"]},
        ],
    },
    # rods 0 and 1 are swept onto each other along (0, -1/2, -1/2)
    "isotopic_4rod": {
        "rods": [
            {"direction": [1, 0, 0], "basepoint": ["0", "0", "0"]},
            {"direction": [1, 0, 0], "basepoint": ["0", "1/2", "1/2"]},
            {"direction": [0, 1, 0], "basepoint": ["0", "0", "1/4"]},
            {"direction": [0, 0, 1], "basepoint": ["1/2", "1/4", "0"]},
        ],
    },
    # the (0,1,-1) rod cuts the only remaining in-cell lift of rod 1 off from rod 0
    "blocked_5rod": {
        "rods": [
            {"direction": [1, 0, 0], "basepoint": ["0", "0", "0"]},
            {"direction": [1, 0, 0], "basepoint": ["0", "1/2", "1/2"]},
            {"direction": [0, 1, 0], "basepoint": ["0", "0", "1/4"]},
            {"direction": [0, 0, 1], "basepoint": ["1/2", "1/4", "0"]},
            {"direction": [0, 1, -1], "basepoint": ["1/4", "0", "1/8"]},
        ],
    },
}


def names():
    return sorted(CATALOG)


def document(name):
    entry = CATALOG[name]
    return {"name": name, "rods": [dict(r) for r in entry["rods"]]}
