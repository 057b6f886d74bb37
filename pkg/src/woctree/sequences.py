# Sequence prefixes as printed in the literature, indexed from n = 1
# (Fubini numbers from n = 0).  Used as golden values by `verify` and tests.

FUBINI = (1, 1, 3, 13, 75, 541, 4683, 47293)

TIE_W = (1, 3, 11, 47, 239, 1439, 10079, 80639)
LT_W = (1, 3, 9, 25, 65, 161, 385, 897)
LE_W = (1, 3, 7, 13, 21, 31, 43, 57)

STRICT123_A = (1, 3, 12, 56, 284, 1516, 8384, 47600)
STRICT123_W = (1, 3, 13, 69, 401, 2433, 15121, 95441)

WEAK123_A = (1, 3, 9, 31, 113, 431, 1697, 6847)
WEAK123_W = (1, 3, 13, 59, 269, 1227, 5613, 25771, 118765)

MIXED123_A = (1, 3, 11, 45)  # little Schroeder numbers
MIXED123_W = (1, 3, 13, 65, 341, 1827, 9913, 54273, 299209, 1658723)

KEQUAL3_W = (1, 3, 13, 73, 505, 4165, 39985, 438145)
