//! Published reference values, transcribed verbatim where possible.

/// Brauer character blocks: (n, column classes, rows of (label, values)).
pub type CharBlock = (usize, &'static [&'static str], &'static [(&'static str, &'static [i64])]);

pub const SN_TABLES: &[CharBlock] = &[
    (2, &["2", "1,1"], &[("2", &[1, 1]), ("1,1", &[-1, 1])]),
    (3, &["3", "2,1", "1,1,1"], &[("3", &[1, 1, 1]), ("2,1", &[-1, 0, 2]), ("1,1,1", &[1, -1, 1])]),
    (
        4,
        &["4", "3,1", "2,2", "2,1,1", "1,1,1,1"],
        &[
            ("4", &[1, 1, 1, 1, 1]),
            ("3,1", &[-1, 0, -1, 1, 3]),
            ("2,2", &[0, -1, 2, 0, 2]),
            ("2,1,1", &[1, 0, -1, -1, 3]),
            ("1,1,1,1", &[-1, 1, 1, -1, 1]),
        ],
    ),
];

pub const BRAUER_LOWER: &[CharBlock] = &[
    (2, &["2", "1,1"], &[("0", &[1, 1])]),
    (3, &["3", "2,1", "1,1,1"], &[("1", &[0, 1, 3])]),
    (
        4,
        &["4", "3,1", "2,2", "2,1,1", "1,1,1,1"],
        &[("2", &[0, 0, 2, 2, 6]), ("1,1", &[0, 0, -2, 0, 6]), ("0", &[1, 0, 3, 1, 3])],
    ),
];

/// pb_μ in the sb basis.
pub const PB_IN_SB: &[(&str, &str)] = &[
    ("1", "sb(1)"),
    ("2", "sb(2)-sb(1,1)+1"),
    ("1,1", "sb(2)+sb(1,1)+1"),
    ("3", "sb(3)-sb(2,1)+sb(1,1,1)"),
    ("2,1", "sb(3)-sb(1,1,1)+sb(1)"),
    ("1,1,1", "sb(3)+2sb(2,1)+sb(1,1,1)+3sb(1)"),
    ("4", "sb(4)-sb(3,1)+sb(2,1,1)-sb(1,1,1,1)+1"),
    ("3,1", "sb(4)-sb(2,2)+sb(1,1,1,1)"),
    ("2,2", "sb(4)-sb(3,1)+2sb(2,2)-sb(2,1,1)+sb(1,1,1,1)+2sb(2)-2sb(1,1)+3"),
    ("2,1,1", "sb(4)+sb(3,1)-sb(2,1,1)-sb(1,1,1,1)+2sb(2)+1"),
    ("1,1,1,1", "sb(4)+3sb(3,1)+2sb(2,2)+3sb(2,1,1)+sb(1,1,1,1)+6sb(2)+6sb(1,1)+3"),
];

/// sb_A in the pb basis.
pub const SB_IN_PB: &[(&str, &str)] = &[
    ("1", "pb(1)"),
    ("2", "1/2[pb(2)+pb(1,1)]-1"),
    ("1,1", "1/2[-pb(2)+pb(1,1)]"),
    ("3", "1/6[2pb(3)+3pb(2,1)+pb(1,1,1)]-pb(1)"),
    ("2,1", "1/3[-pb(3)+pb(1,1,1)]-pb(1)"),
    ("1,1,1", "1/6[2pb(3)-3pb(2,1)+pb(1,1,1)]"),
    ("4", "1/24[6pb(4)+8pb(3,1)+3pb(2,2)+6pb(2,1,1)+pb(1,1,1,1)]-1/2[pb(2)+pb(1,1)]"),
    ("3,1", "1/8[-2pb(4)-pb(2,2)+2pb(2,1,1)+pb(1,1,1,1)]-pb(1,1)+1"),
    ("2,2", "1/12[-4pb(3,1)+3pb(2,2)+pb(1,1,1,1)]-1/2[pb(2)+pb(1,1)]"),
    ("2,1,1", "1/8[2pb(4)-pb(2,2)-2pb(2,1,1)+pb(1,1,1,1)]+1/2[pb(2)-pb(1,1)]"),
    ("1,1,1,1", "1/24[-6pb(4)+8pb(3,1)+3pb(2,2)-6pb(2,1,1)+pb(1,1,1,1)]"),
];

/// Product forms of sb_A(q,t).
pub const SB_CLOSED: &[(&str, &str)] = &[
    ("1", "1+(t-t^-1)/(q-q^-1)"),
    ("2", "(1+(t q-t^-1 q^-1)/(q^2-q^-2))(t-t^-1)/(q-q^-1)"),
    ("1,1", "(1+(t q^-1-t^-1 q)/(q^2-q^-2))(t-t^-1)/(q-q^-1)"),
    ("3", "(1+(t q^2-t^-1 q^-2)/(q^3-q^-3))((t-t^-1)/(q^2-q^-2))((t q-t^-1 q^-1)/(q-q^-1))"),
    ("2,1", "(1+(t-t^-1)/(q^3-q^-3))((t q^-1-t^-1 q)/(q-q^-1))((t q-t^-1 q^-1)/(q-q^-1))"),
    ("1,1,1", "(1+(t q^-2-t^-1 q^2)/(q^3-q^-3))((t-t^-1)/(q^2-q^-2))((t q^-1-t^-1 q)/(q-q^-1))"),
    (
        "4",
        "(1+(t q^3-t^-1 q^-3)/(q^4-q^-4))((t-t^-1)/(q^3-q^-3))((t q-t^-1 q^-1)/(q^2-q^-2))((t q^2-t^-1 q^-2)/(q-q^-1))",
    ),
    (
        "3,1",
        "(1+(t q-t^-1 q^-1)/(q^4-q^-4))((t q^-1-t^-1 q)/(q^2-q^-2))((t-t^-1)/(q-q^-1))((t q^2-t^-1 q^-2)/(q-q^-1))",
    ),
    ("2,2", "(1+(t-t^-1)/(q^3-q^-3))(1+(t-t^-1)/(q-q^-1))((t q^-2-t^-1 q^2)/(q^2-q^-2))((t q^2-t^-1 q^-2)/(q^2-q^-2))"),
    (
        "2,1,1",
        "(1+(t q^-1-t^-1 q)/(q^4-q^-4))((t q^-2-t^-1 q^2)/(q-q^-1))((t q-t^-1 q^-1)/(q^2-q^-2))((t-t^-1)/(q-q^-1))",
    ),
    (
        "1,1,1,1",
        "(1+(t q^-3-t^-1 q^3)/(q^4-q^-4))((t-t^-1)/(q^3-q^-3))((t q^-1-t^-1 q)/(q^2-q^-2))((t q^-2-t^-1 q^2)/(q-q^-1))",
    ),
];

/// c̃ rows: (colors, r, cells over the listed columns; None marks a wrong-parity column).
pub struct CTildeRef {
    pub r: u32,
    pub columns: &'static [&'static str],
    pub rows: &'static [(&'static str, &'static [Option<i64>])],
}

const X: Option<i64> = None;

pub const CTILDE: &[CTildeRef] = &[
    CTildeRef {
        r: 2,
        columns: &["0", "2", "1,1", "4", "3,1", "2,2", "2,1,1", "1,1,1,1"],
        rows: &[
            ("1", &[Some(1), Some(1), Some(-1), X, X, X, X, X]),
            ("2", &[Some(1), Some(1), Some(-1), Some(1), Some(-1), Some(1), Some(0), Some(0)]),
            ("1,1", &[Some(1), Some(1), Some(-1), Some(0), Some(0), Some(1), Some(-1), Some(1)]),
        ],
    },
    CTildeRef {
        r: 1,
        columns: &["0", "1", "2", "1,1", "3", "2,1", "1,1,1", "4", "3,1", "2,2", "2,1,1", "1,1,1,1"],
        rows: &[
            ("1|1", &[Some(1), X, Some(1), Some(1), X, X, X, X, X, X, X, X]),
            ("2|1", &[X, Some(1), X, X, Some(1), Some(1), Some(0), X, X, X, X, X]),
            ("1,1|1", &[X, Some(1), X, X, Some(0), Some(1), Some(1), X, X, X, X, X]),
            ("2|2", &[Some(1), X, Some(1), Some(1), X, X, X, Some(1), Some(1), Some(1), Some(0), Some(0)]),
            ("2|1,1", &[Some(0), X, Some(1), Some(1), X, X, X, Some(0), Some(1), Some(0), Some(1), Some(0)]),
            ("1,1|1,1", &[Some(1), X, Some(1), Some(1), X, X, X, Some(0), Some(0), Some(1), Some(1), Some(1)]),
            ("3|1", &[Some(0), X, Some(1), Some(0), X, X, X, Some(1), Some(1), Some(0), Some(0), Some(0)]),
            ("2,1|1", &[Some(0), X, Some(1), Some(1), X, X, X, Some(0), Some(1), Some(1), Some(1), Some(0)]),
            ("1,1,1|1", &[Some(0), X, Some(0), Some(1), X, X, X, Some(0), Some(0), Some(0), Some(1), Some(1)]),
        ],
    },
    CTildeRef {
        r: 1,
        columns: &["0", "1", "2", "1,1", "3", "2,1", "1,1,1", "4", "3,1", "2,2", "2,1,1", "1,1,1,1"],
        rows: &[
            ("1|1|1", &[X, Some(3), X, X, Some(1), Some(2), Some(1), X, X, X, X, X]),
            ("2|1|1", &[Some(1), X, Some(3), Some(2), X, X, X, Some(1), Some(2), Some(1), Some(1), Some(0)]),
            ("1,1|1|1", &[Some(1), X, Some(2), Some(3), X, X, X, Some(0), Some(1), Some(1), Some(2), Some(1)]),
        ],
    },
];

/// A W-expansion Σ c·q^{a k} t^{b k} sb_λ, as (a, b, c, λ).
pub type KTerms = &'static [(i64, i64, i64, &'static [u32])];

/// (r, L, colors, terms): torus link T(rL, kL).
pub const W_EXPANSIONS: &[(u32, u32, &str, KTerms)] = &[
    (1, 2, "1|1", &[(2, 0, 1, &[2]), (-2, 0, 1, &[1, 1]), (0, -2, 1, &[])]),
    (1, 2, "2|1", &[(4, 0, 1, &[3]), (-2, 0, 1, &[2, 1]), (-2, -2, 1, &[1])]),
    (1, 2, "1,1|1", &[(2, 0, 1, &[2, 1]), (-4, 0, 1, &[1, 1, 1]), (2, -2, 1, &[1])]),
    (
        1,
        2,
        "2|2",
        &[
            (8, 0, 1, &[4]),
            (0, 0, 1, &[3, 1]),
            (-4, 0, 1, &[2, 2]),
            (-2, -2, 1, &[2]),
            (-6, -2, 1, &[1, 1]),
            (-4, -4, 1, &[]),
        ],
    ),
    (1, 2, "2|1,1", &[(4, 0, 1, &[3, 1]), (-4, 0, 1, &[2, 1, 1]), (2, -2, 1, &[2]), (-2, -2, 1, &[1, 1])]),
    (
        1,
        2,
        "1,1|1,1",
        &[
            (4, 0, 1, &[2, 2]),
            (0, 0, 1, &[2, 1, 1]),
            (-8, 0, 1, &[1, 1, 1, 1]),
            (6, -2, 1, &[2]),
            (2, -2, 1, &[1, 1]),
            (4, -4, 1, &[]),
        ],
    ),
    (1, 2, "3|1", &[(6, 0, 1, &[4]), (-2, 0, 1, &[3, 1]), (-4, -2, 1, &[2])]),
    (
        1,
        2,
        "2,1|1",
        &[(4, 0, 1, &[3, 1]), (0, 0, 1, &[2, 2]), (-4, 0, 1, &[2, 1, 1]), (2, -2, 1, &[2]), (-2, -2, 1, &[1, 1])],
    ),
    (1, 2, "1,1,1|1", &[(2, 0, 1, &[2, 1, 1]), (-6, 0, 1, &[1, 1, 1, 1]), (4, -2, 1, &[1, 1])]),
    (2, 1, "1", &[(1, -1, 1, &[2]), (-1, -1, -1, &[1, 1]), (0, -2, 1, &[])]),
    (
        2,
        1,
        "2",
        &[
            (2, -2, 1, &[4]),
            (-2, -2, -1, &[3, 1]),
            (-4, -2, 1, &[2, 2]),
            (-3, -3, 1, &[2]),
            (-5, -3, -1, &[1, 1]),
            (-4, -4, 1, &[]),
        ],
    ),
    (
        2,
        1,
        "1,1",
        &[
            (4, -2, 1, &[2, 2]),
            (2, -2, -1, &[2, 1, 1]),
            (-2, -2, 1, &[1, 1, 1, 1]),
            (5, -3, 1, &[2]),
            (3, -3, -1, &[1, 1]),
            (4, -4, 1, &[]),
        ],
    ),
    (1, 3, "1|1|1", &[(6, 0, 1, &[3]), (0, 0, 2, &[2, 1]), (-6, 0, 1, &[1, 1, 1]), (0, -2, 3, &[1])]),
    (
        1,
        3,
        "2|1|1",
        &[
            (10, 0, 1, &[4]),
            (2, 0, 2, &[3, 1]),
            (-2, 0, 1, &[2, 2]),
            (-6, 0, 1, &[2, 1, 1]),
            (0, -2, 3, &[2]),
            (-4, -2, 2, &[1, 1]),
            (-2, -4, 1, &[]),
        ],
    ),
    (
        1,
        3,
        "1,1|1|1",
        &[
            (6, 0, 1, &[3, 1]),
            (2, 0, 1, &[2, 2]),
            (-2, 0, 2, &[2, 1, 1]),
            (-10, 0, 1, &[1, 1, 1, 1]),
            (4, -2, 2, &[2]),
            (0, -2, 3, &[1, 1]),
            (2, -4, 1, &[]),
        ],
    ),
];

/// z-expansions without anti-symmetrization: (r, k, L, μ⃗, expansion).
pub const Z_EXPANSIONS: &[(u32, u32, u32, &str, &str)] = &[
    (1, 1, 2, "1,1|1", "(-t^-3+3t^-1-3t+t^3)+(t^-2-2+t^2)z"),
    (
        1,
        2,
        2,
        "1,1|1",
        "(-4t^-5+4t^-3+12t^-1-20t+8t^3)+(4t^-4+4t^-2-20+12t^2)z+(-t^-5+t^-3+3t^-1-9t+6t^3)z^2\
         +(t^-4+t^-2-9+7t^2)z^3+(-t+t^3)z^4+(-1+t^2)z^5",
    ),
    (
        1,
        3,
        2,
        "1,1|1",
        "(-9t^-7+9t^-5-3t^-3+45t^-1-72t+30t^3)+(9t^-6+27t^-2-90+54t^2)z\
         +(-6t^-7+6t^-5-t^-3+39t^-1-93t+55t^3)z^2+(6t^-6+27t^-2-114+81t^2)z^3\
         +(-t^-7+t^-5+11t^-1-47t+36t^3)z^4+(t^-6+9t^-2-55+45t^2)z^5\
         +(t^-1-11t+10t^3)z^6+(-12+t^-2+11t^2)z^7+(-t+t^3)z^8+(-1+t^2)z^9",
    ),
    (1, 1, 2, "2|1", "(t^-3-t^-1-t+t^3)+(-t^-2+t^2)z"),
    (
        1,
        2,
        2,
        "2|1",
        "(2t^-5-2t^-3+2t^-1-6t+4t^3)+(-2t^-4+2t^-2-6+6t^2)z+(t^-5-t^-3+t^-1-5t+4t^3)z^2\
         +(-t^-4+t^-2-5+5t^2)z^3+(-t+t^3)z^4+(-1+t^2)z^5",
    ),
    (
        1,
        3,
        2,
        "2|1",
        "(3t^-7-3t^-5-t^-3+9t^-1-18t+10t^3)+(-3t^-6+9t^-2-24+18t^2)z\
         +(4t^-7-4t^-5-t^-3+15t^-1-39t+25t^3)z^2+(-4t^-6+15t^-2-50+39t^2)z^3\
         +(t^-7-t^-5+7t^-1-29t+22t^3)z^4+(-t^-6+7t^-2-35+29t^2)z^5\
         +(t^-1-9t+8t^3)z^6+(t^-2-10+9t^2)z^7+(-t+t^3)z^8+(-1+t^2)z^9",
    ),
    (
        2,
        3,
        1,
        "1,1",
        "(t^-12+6t^-10-33t^-8+52t^-6-33t^-4+6t^-2+1)\
         +(36t^-11-132t^-9+180t^-7-108t^-5+24t^-3)z\
         +(36t^-12-103t^-10+76t^-8+18t^-6-32t^-4+5t^-2)z^2\
         +(105t^-11-377t^-9+453t^-7-207t^-5+26t^-3)z^3\
         +(105t^-12-350t^-10+341t^-8-87t^-6-10t^-4+t^-2)z^4\
         +(112t^-11-450t^-9+494t^-7-165t^-5+9t^-3)z^5\
         +(112t^-12-441t^-10+440t^-8-110t^-6-t^-4)z^6\
         +(54t^-11-275t^-9+286t^-7-66t^-5+t^-3)z^7\
         +(54t^-12-274t^-10+274t^-8-54t^-6)z^8\
         +(12t^-11-90t^-9+91t^-7-13t^-5)z^9\
         +(12t^-12-90t^-10+90t^-8-12t^-6)z^10\
         +(t^-11-15t^-9+15t^-7-t^-5)z^11\
         +(t^-12-15t^-10+15t^-8-t^-6)z^12\
         +(-t^-9+t^-7)z^13+(-t^-10+t^-8)z^14",
    ),
    (
        1,
        1,
        3,
        "2|1|1",
        "(-t^-4+4t^-2+2-12t^2+7t^4)+(2t^-3-2t^-1-10t+10t^3)z+(1-6t^2+5t^4)z^2+(-6t+6t^3)z^3\
         +(-t^2+t^4)z^4+(-t+t^3)z^5",
    ),
    (
        1,
        2,
        3,
        "2|1|1",
        "(-2t^-8-4t^-6+22t^-4-48t^-2+146-204t^2+90t^4)\
         +(16t^-5-48t^-3+176t^-1-336t+192t^3)z\
         +(-t^-8-2t^-6+15t^-4-68t^-2+361-650t^2+345t^4)z^2\
         +(12t^-5-68t^-3+452t^-1-1036t+640t^3)z^3\
         +(2t^-4-38t^-2+398-950t^2+588t^4)z^4\
         +(2t^-5-38t^-3+494t^-1-1406t+948t^3)z^5\
         +(-10t^-2+239-780t^2+551t^4)z^6\
         +(-10t^-3+286t^-1-1056t+780t^3)z^7\
         +(-t^-2+80-377t^2+298t^4)z^8\
         +(-t^-3+91t^-1-467t+377t^3)z^9\
         +(14-106t^2+92t^4)z^10+(15t^-1-121t+106t^3)z^11\
         +(1-16t^2+15t^4)z^12+(t^-1-17t+16t^3)z^13\
         +(-t^2+t^4)z^14+(-t+t^3)z^15",
    ),
];

/// An N table: (r, k, L, μ⃗, β columns, rows of (2g, values)).
pub struct NTableRef {
    pub r: u32,
    pub k: u32,
    pub l: u32,
    pub mu: &'static str,
    pub betas: &'static [i64],
    pub rows: &'static [(u32, &'static [i64])],
}

pub const N_TABLES: &[NTableRef] = &[
    NTableRef { r: 1, k: 1, l: 2, mu: "1|1", betas: &[], rows: &[] },
    NTableRef { r: 1, k: 2, l: 2, mu: "1|1", betas: &[], rows: &[] },
    NTableRef { r: 1, k: 3, l: 2, mu: "1|1", betas: &[], rows: &[] },
    NTableRef { r: 1, k: 1, l: 2, mu: "1,1|1", betas: &[-3, -1, 1, 3], rows: &[(0, &[-1, 3, -3, 1])] },
    NTableRef {
        r: 1,
        k: 2,
        l: 2,
        mu: "1,1|1",
        betas: &[-5, -3, -1, 1, 3],
        rows: &[(0, &[-4, 4, 12, -20, 8]), (2, &[-1, 1, 3, -9, 6]), (4, &[0, 0, 0, -1, 1])],
    },
    NTableRef {
        r: 1,
        k: 3,
        l: 2,
        mu: "1,1|1",
        betas: &[-7, -5, -3, -1, 1, 3],
        rows: &[
            (0, &[-9, 9, -3, 45, -72, 30]),
            (2, &[-6, 6, -1, 39, -93, 55]),
            (4, &[-1, 1, 0, 11, -47, 36]),
            (6, &[0, 0, 0, 1, -11, 10]),
            (8, &[0, 0, 0, 0, -1, 1]),
        ],
    },
    NTableRef { r: 1, k: 1, l: 2, mu: "2|1", betas: &[-3, -1, 1, 3], rows: &[(0, &[1, -1, -1, 1])] },
    NTableRef {
        r: 1,
        k: 2,
        l: 2,
        mu: "2|1",
        betas: &[-5, -3, -1, 1, 3],
        rows: &[(0, &[2, -2, 2, -6, 4]), (2, &[1, -1, 1, -5, 4]), (4, &[0, 0, 0, -1, 1])],
    },
    NTableRef {
        r: 1,
        k: 3,
        l: 2,
        mu: "2|1",
        betas: &[-7, -5, -3, -1, 1, 3],
        rows: &[
            (0, &[3, -3, -1, 9, -18, 10]),
            (2, &[4, -4, -1, 15, -39, 25]),
            (4, &[1, -1, 0, 7, -29, 22]),
            (6, &[0, 0, 0, 1, -9, 8]),
            (8, &[0, 0, 0, 0, -1, 1]),
        ],
    },
    NTableRef {
        r: 1,
        k: 1,
        l: 2,
        mu: "2|2",
        betas: &[-3, -1, 1, 3],
        rows: &[(1, &[-2, 2, -2, 2]), (3, &[-1, 1, -1, 1])],
    },
    NTableRef {
        r: 1,
        k: 2,
        l: 2,
        mu: "2|2",
        betas: &[-5, -3, -1, 1, 3],
        rows: &[
            (1, &[-8, 4, 20, -36, 20]),
            (3, &[-24, 20, 40, -96, 60]),
            (5, &[-22, 21, 29, -97, 69]),
            (7, &[-8, 8, 9, -47, 38]),
            (9, &[-1, 1, 1, -11, 10]),
            (11, &[0, 0, 0, -1, 1]),
        ],
    },
    NTableRef { r: 1, k: 1, l: 2, mu: "3|1", betas: &[-3, -1, 1, 3], rows: &[(1, &[-1, 0, 0, 1])] },
    NTableRef {
        r: 1,
        k: 2,
        l: 2,
        mu: "3|1",
        betas: &[-5, -3, -1, 1, 3],
        rows: &[(1, &[-4, 4, 0, -8, 8]), (3, &[-5, 5, 0, -14, 14]), (5, &[-1, 1, 0, -7, 7]), (7, &[0, 0, 0, -1, 1])],
    },
    NTableRef {
        r: 2,
        k: 3,
        l: 1,
        mu: "1,1",
        betas: &[-11, -9, -7, -5, -3],
        rows: &[
            (1, &[36, -132, 180, -108, 24]),
            (3, &[105, -377, 453, -207, 26]),
            (5, &[112, -450, 494, -165, 9]),
            (7, &[54, -275, 286, -66, 1]),
            (9, &[12, -90, 91, -13, 0]),
            (11, &[1, -15, 15, -1, 0]),
            (13, &[0, -1, 1, 0, 0]),
        ],
    },
    NTableRef {
        r: 2,
        k: 3,
        l: 1,
        mu: "2",
        betas: &[-11, -9, -7, -5, -3],
        rows: &[
            (1, &[-6, 26, -42, 30, -8]),
            (3, &[-35, 125, -161, 85, -14]),
            (5, &[-56, 210, -238, 91, -7]),
            (7, &[-36, 165, -174, 46, -1]),
            (9, &[-10, 66, -67, 11, 0]),
            (11, &[-1, 13, -13, 1, 0]),
            (13, &[0, 1, -1, 0, 0]),
        ],
    },
    NTableRef {
        r: 1,
        k: 1,
        l: 3,
        mu: "2|1|1",
        betas: &[-3, -1, 1, 3],
        rows: &[(1, &[2, -2, -10, 10]), (3, &[0, 0, -6, 6]), (5, &[0, 0, -1, 1])],
    },
    NTableRef {
        r: 1,
        k: 2,
        l: 3,
        mu: "2|1|1",
        betas: &[-5, -3, -1, 1, 3],
        rows: &[
            (1, &[16, -48, 176, -336, 192]),
            (3, &[12, -68, 452, -1036, 640]),
            (5, &[2, -38, 494, -1406, 948]),
            (7, &[0, -10, 286, -1056, 780]),
            (9, &[0, -1, 91, -467, 377]),
            (11, &[0, 0, 15, -121, 106]),
            (13, &[0, 0, 1, -17, 16]),
            (15, &[0, 0, 0, -1, 1]),
        ],
    },
];
