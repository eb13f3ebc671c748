"""Canonical texts of the worked example objects, shared by the tests."""

WALK_A = "sym:0,-1,2,2,0,2,0,-7,-6,-9,-10,-5"
DYCK_A = "dyck:U U U D2 U U D3 D0 D1 D0 U U U D2 U U U D0 D1 D2 D0 U D0 D0"
MATCHING_A = "match:1-8,2-10,3-4,5-9,6-7,11-18,12-21,13-14,15-19,16-23,17-20,22-24"

WALK_B = "asym:0,0,-2,-2,-2,-1,-6,-7,-8,-7,-7,-9,-7,-7"
MOTZKIN_B = "motzkin:U0 F1 U0 C1 D1 C0 D0 F0 U0 C0 C0 U1 D0 D0"
PERM_B = "perm:7 2 5 1 4 3 6 8 13 9 10 14 12 11"

# (height, weight) of each fall of DYCK_A, read off the drawing
DYCK_A_FALLS = [
    (2, 2), (3, 3), (2, 0), (1, 1), (0, 0), (2, 2),
    (4, 0), (3, 1), (2, 2), (1, 0), (1, 0), (0, 0),
]
