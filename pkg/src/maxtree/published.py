"""Reference values as printed in the source publication, kept verbatim."""

# Maximal tie-permitting counts for r = 3.  Keys are n; each column lists
# z = 1..14 top to bottom.
R3_EVENT_TABLE = {
    3: [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    5: [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    7: [1, 1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    9: [1, 6, 6, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    11: [0, 0, 4, 15, 12, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    13: [0, 0, 4, 33, 68, 40, 0, 0, 0, 0, 0, 0, 0, 0],
    15: [0, 0, 4, 69, 276, 390, 180, 0, 0, 0, 0, 0, 0, 0],
    17: [0, 0, 2, 75, 552, 1470, 1620, 630, 0, 0, 0, 0, 0, 0],
    19: [0, 0, 2, 129, 1488, 6250, 11820, 10290, 3360, 0, 0, 0, 0, 0],
    21: [0, 0, 2, 237, 4224, 26490, 76680, 112140, 80640, 22680, 0, 0, 0, 0],
    23: [0, 0, 1, 240, 6810, 63540, 271170, 604800, 730800, 453600, 113400, 0, 0, 0],
    25: [0, 0, 1, 402, 16530, 213320, 1248450, 3886260, 6879600, 6955200, 3742200, 831600, 0, 0],
    27: [0, 0, 1, 726, 43746, 774000, 6075900, 25424280, 61923960, 90720000, 78813000,
         37422000, 7484400, 0],
    29: [0, 0, 0, 324, 38880, 1072360, 12061785, 70014882, 235479636, 485318736, 622588680,
         485155440, 210311640, 38918880],
}

R3_EVENT_TOTALS = {
    3: 1, 5: 1, 7: 4, 9: 19, 11: 31, 13: 145, 15: 919, 17: 4349, 19: 37029,
    21: 356733, 23: 1738361, 25: 17617292, 27: 210188713, 29: 1545806523,
}

# Root splits (t, n - t) of the bifurcating maximizer for n = 3..16.
BIFURCATING_ROOT_SPLITS = {
    3: (1, 2), 4: (2, 2), 5: (2, 3), 6: (2, 4), 7: (4, 3), 8: (4, 4), 9: (4, 5),
    10: (4, 6), 11: (4, 7), 12: (4, 8), 13: (8, 5), 14: (8, 6), 15: (8, 7), 16: (8, 8),
}
