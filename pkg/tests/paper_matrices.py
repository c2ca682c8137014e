"""Matrices displayed in the paper, transcribed row by row."""


def parse(*rows):
    return [[int(ch) for ch in r] for r in rows]


# n = 10: I_n + P and its minor with row 1, column 5 removed
CYCLE_PLUS_IDENTITY_10 = parse(
    "1100000000", "0110000000", "0011000000", "0001100000", "0000110000",
    "0000011000", "0000001100", "0000000110", "0000000011", "1000000001",
)
MINOR_10_5 = parse(
    "011000000", "001100000", "000100000", "000010000", "000011000",
    "000001100", "000000110", "000000011", "100000001",
)
A_10_5 = parse(
    "11000000", "01100000", "00100000", "00010000",
    "00011000", "00001100", "00000110", "00000011",
)
A1_5 = parse("110", "011", "001")
A2_10_5 = parse("10000", "11000", "01100", "00110", "00011")
B_10_5 = parse(
    "011000000", "001100000", "000100000", "000010000", "000011000",
    "000001100", "000000110", "000000011", "000000001",
)
B1_5 = parse("0110", "0011", "0001")
B2_10_5 = parse("10000", "11000", "01100", "00110", "00011", "00001")

STAIRCASES_5 = [
    parse("110", "011", "001"),
    parse("100", "110", "011"),
    parse("000", "100", "110", "011"),
    parse("00110", "01100", "01000"),
]
STAIRCASES_6 = [
    parse("1100", "0110", "0011"),
    parse("100", "110", "011", "001"),
    parse("000", "100", "110", "011", "001"),
    parse("00110", "01100", "11000"),
]
