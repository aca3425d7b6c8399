"""
Published active-set listings for c = 1, in compressed notation.

Each entry is (p, a, eps, methods, listing). Listings keep the published
spelling, including the "[..{" variant.
"""

GOLDEN_LISTINGS = [
    # p = 1
    ("1", 4, 1e-1, ("pw",), "{∅,{1}}"),
    ("1", 4, 1e-2, ("pw",), "{∅,[...{3}],{1,2},{1,3}}"),
    ("1", 4, 1e-3, ("pw",), "{∅,[...{5}],[...{1,5}]}"),
    ("1", 3, 1e-1, ("pw",), "{∅,{1},{2},{1,2}}"),
    ("1", 3, 1e-2, ("pw",), "{∅,[...{4}],[..{1,4}]}"),
    ("1", 3, 1e-3, ("pw",), "{∅,[...{9}],[...{1,9}],{2,3},{2,4},{1,2,3},{1,2,4}}"),
    ("1", 2, 1e-1, ("pw",), "{∅,[...{3}],{1,2},{1,3}}"),
    ("1", 2, 1e-2, ("pw",), "{∅,[...{9}],[...{1,9}],{2,3},{2,4},{1,2,3},{1,2,4},"),
    (
        "1",
        2,
        1e-3,
        ("pw",),
        "{∅,[...{31}],[...{1,31}],[...{2,15}],[...{3,10}],[...{4,7}],{5,6},[...{1,2,15}],"
        "[...{1,3,10}],[...{1,4,7}],{1,5,6},{2,3,4},{2,3,5},{1, 2, 3, 4},{1, 2, 3, 5}}",
    ),
    # p = 2, a = 4
    ("2", 4, 1e-1, ("qopt", "opt"), "{∅,{1}}"),
    ("2", 4, 1e-1, ("pw",), "{∅,{1},{2}}"),
    ("2", 4, 1e-2, ("qopt", "opt"), "{∅,{1},{2},{1,2}}"),
    ("2", 4, 1e-2, ("pw",), "{∅,[...{4}],[...{1,4}]}"),
    ("2", 4, 1e-3, ("qopt", "opt"), "{∅,[...{5}],[...{1,4}]}"),
    ("2", 4, 1e-3, ("pw",), "{∅,[...{9}],[...{1,8}],{2,3},{2,4}, {1, 2, 3}}"),
    # p = 2, a = 3
    ("2", 3, 1e-1, ("qopt", "opt"), "{∅,{1}}"),
    ("2", 3, 1e-1, ("pw",), "{∅,[...{3}],{1,2}}"),
    ("2", 3, 1e-2, ("qopt", "opt"), "{∅,[...{4}],{1,2},{1,3}}"),
    ("2", 3, 1e-2, ("pw",), "{∅,[...{9}],[...{1,7}],{2,3},{1,2,3}}"),
    ("2", 3, 1e-3, ("qopt",), "{∅,[...{12}],[...{1,10}],[...{2,5}],{1,2,3}}"),
    ("2", 3, 1e-3, ("opt",), "{∅,[...{11}],[...{1,9}],{2,3},{2,4},{1,2,3},{1,2,4}}"),
    (
        "2",
        3,
        1e-3,
        ("pw",),
        "{∅,[...{26}],[...{1,21}],[...{2,10}],[...{3,7}],{4,5},[...{1,2,9}],[...{1,3,6}]}",
    ),
    # p = 2, a = 2
    ("2", 2, 1e-1, ("opt",), "{∅,{1},{2},{1,2}}"),
    ("2", 2, 1e-1, ("qopt",), "{∅,[...{4}],{1,2}}"),
    ("2", 2, 1e-1, ("pw",), "{∅,[...{8}],[...{1,6}], {2, 3}}"),
    ("2", 2, 1e-2, ("qopt",), "{∅,[...{18}],[...{1,10}],[...{2,5}], {1, 2, 3}}"),
    ("2", 2, 1e-2, ("opt",), "{∅,[...{14}],[...{1,11}],[...{2,5}],[...{1,2,4}]}"),
    # p = inf, a = 4
    ("inf", 4, 1e-1, ("qopt", "opt"), "{∅,{1}}"),
    ("inf", 4, 1e-1, ("pw",), "{∅,[...{4}],{1,2},{1,3}}"),
    ("inf", 4, 1e-2, ("qopt", "opt"), "{∅,[...{3}],{1,2}}"),
    ("inf", 4, 1e-2, ("pw",), "{∅,[...{10}],[...{1,8}],{2,3},{2,4},{1,2,3}}"),
    ("inf", 4, 1e-3, ("qopt",), "{∅,[...{8}],[...{1,7}]}"),
    ("inf", 4, 1e-3, ("opt",), "{ ∅, [...{8}], [...{1, 6}], {2, 3}}"),
    (
        "inf",
        4,
        1e-3,
        ("pw",),
        "{∅,[...{26}],[...{1,22}],[...{2,11}],[...{3,7}],{4,5},[...{1,2,9}],[...{1,3,6}]}",
    ),
    # p = inf, a = 3
    ("inf", 3, 1e-1, ("qopt", "opt"), "{∅,{1},{2}}"),
    ("inf", 3, 1e-1, ("pw",), "{∅,[...{10}],[...{1,8}],{2,3},{2,4},{1,2,3}}"),
    ("inf", 3, 1e-2, ("qopt", "opt"), "{∅,[...{8}],[...{1,6}],{2,3}}"),
    (
        "inf",
        3,
        1e-2,
        ("pw",),
        "{∅, [...{49}], [...{1, 39}], [...{2, 19}], [... {3, 13}], [...{4, 9}], {5, 6}, "
        "{5, 7}, [...{1, 2, 15}], [...{1, 3, 10}], [...{1, 4, 7}], {1, 5, 6}, {2, 3, 4}, "
        "{2, 3, 5}, {1, 2, 3, 4}}",
    ),
    (
        "inf",
        3,
        1e-3,
        ("qopt",),
        "{∅,[...{36}],[...{1,29}],[...{2,14}],[...{3, 9}], [...{4, 7}], [...{1,2,8}]}",
    ),
    (
        "inf",
        3,
        1e-3,
        ("opt",),
        "{∅,[...{31}],[...{1,25}],[...{2,12}],[...{3, 8}], [...{4, 6}],[...{1,2,9}],[...{1,3,6}]}",
    ),
    (
        "inf",
        3,
        1e-3,
        ("pw",),
        "{∅,[...{208}],[...{1,165}],[...{2,82}],[...{3,55}],[...{4,41}],[...{5,33}],"
        "[...{6,27}],[...{7,23}],[...{8,20}],[...{9,18}],[...{10,16}],[...{11,15}],{12,13},"
        "[...{1,2,65}],[...{1,3,43}],[...{1,4,32}],[...{1,5,26}],[...{1,6,21}],[...{1,7,18}],"
        "[...{1,8,16}],[...{1,9,14}],[...{1,10,13}],[...{2,3,21}],[...{2,4,16}],[...{2,5,13}],"
        "[...{2,6,10}],{2,7,8},{2,7,9},[...{3,4,10}],[...{3,5,8}],{3,6,7},{4,5,6},"
        "[...{1,2,3,17}],[...{1,2,4,13}],[...{1,2,5,10}],{1,2,6,7},{1,2,6,8},"
        "[...{1,3,4,8}],{1,3,5,6}}",
    ),
    # p = inf, a = 2
    ("inf", 2, 1e-1, ("qopt",), "{∅,[...{22}],[...{1,15}],{2,3}}"),
    ("inf", 2, 1e-1, ("opt",), "{∅,[...{16}],[...{1,12}],[...{2,5}], [...{1, 2, 4}]}"),
]
