"""
Reference lists of nontrivial palindromic elements in leaf quotients.

Keys are ``(group, removed leaf)``; each value is a list of reduced words,
written with the removed leaf first.
"""

F4_4 = [(4,), (3, 4), (2, 3, 4), (1, 2, 3, 4), (3, 2, 3, 4), (4, 3, 2, 3, 4)]

# the diagram flip 1 <-> 4, 2 <-> 3 of F4 applied to F4_4
F4_1 = [tuple(5 - i for i in w) for w in F4_4]

E8_8 = [
    (8,), (8, 7), (8, 7, 6), (8, 7, 6, 5), (8, 7, 6, 5, 4), (8, 7, 6, 5, 4, 2),
    (8, 7, 6, 5, 4, 3), (8, 7, 6, 5, 4, 3, 1),
    (8, 7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 8),
]

E8_1 = [
    (1,), (1, 3), (1, 3, 4), (1, 3, 4, 5), (1, 3, 4, 5, 6), (1, 3, 4, 5, 6, 7),
    (1, 3, 4, 5, 6, 7, 8), (1, 3, 4, 2),
    (1, 3, 4, 5, 2, 4, 3, 1),
    (1, 3, 4, 5, 2, 4, 3, 1, 6, 5, 4, 3, 2, 4, 5, 6),
    (1, 3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1,
     3, 4, 5, 6, 7, 2, 4, 5, 6, 3, 4, 5, 2, 4, 3, 1),
]

E8_2 = [
    (2,), (2, 4), (2, 4, 3), (2, 4, 3, 1),
    (2, 4, 3, 1, 5, 6, 4, 5, 3, 4, 2, 4, 3, 1, 5, 6, 4, 5, 3, 4, 2),
    (2, 4, 5), (2, 4, 5, 6), (2, 4, 5, 6, 7), (2, 4, 5, 6, 7, 8),
    (2, 4, 5, 3, 4, 2),
    (2, 4, 5, 3, 4, 2, 6, 5, 4, 3),
    (2, 4, 5, 3, 4, 2, 6, 7, 5, 6, 4, 5, 3, 4, 2),
    (2, 4, 5, 3, 4, 2, 6, 7, 5, 6, 4, 5, 3, 4, 2, 8, 7, 6, 5, 4, 3),
    (2, 4, 5, 3, 4, 2, 1, 3, 4, 5),
    (2, 4, 5, 3, 4, 2, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2, 5, 4, 3, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2,
     5, 4, 3, 1, 6, 7, 5, 6, 4, 5, 3, 4, 2),
]

REFERENCE_LISTS = {
    ("F4", 4): F4_4,
    ("F4", 1): F4_1,
    ("E8", 8): E8_8,
    ("E8", 1): E8_1,
    ("E8", 2): E8_2,
}
