//! Published values used as test oracles, typed in independently of the
//! bundled data files.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;

pub fn q(s: &str) -> BigRational {
    match s.split_once('/') {
        Some((n, d)) => BigRational::new(n.parse::<BigInt>().unwrap(), d.parse::<BigInt>().unwrap()),
        None => BigRational::from_integer(s.parse::<BigInt>().unwrap()),
    }
}

/// `(a, L(-2), mu)` for `ell = Q(sqrt(-a))` over the rationals.
pub const KQ_TABLE: [(u64, &str, &str); 11] = [
    (1, "-1/2", "1/96"),
    (2, "-3", "1/16"),
    (3, "-2/9", "1/216"),
    (5, "-30", "5/8"),
    (6, "-46", "23/24"),
    (7, "-16/7", "1/21"),
    (11, "-6", "1/8"),
    (15, "-16", "1/3"),
    (19, "-22", "11/24"),
    (23, "-48", "1"),
    (31, "-96", "2"),
];

/// `(label, zeta_k(-1), L(-2), mu)` for the forty pairs.
pub const PAIR_TABLE: [(&str, &str, &str, &str); 40] = [
    ("C1", "1/30", "4/5", "1/600"),
    ("C2", "1/30", "32/9", "1/135"),
    ("C3", "1/30", "15", "1/32"),
    ("C4", "1/30", "160", "1/3"),
    ("C5", "1/30", "1728/7", "18/35"),
    ("C6", "1/30", "420", "7/8"),
    ("C7", "1/30", "474", "79/80"),
    ("C8", "1/12", "3/2", "1/128"),
    ("C9", "1/12", "92/9", "23/432"),
    ("C10", "1/12", "64", "1/3"),
    ("C11", "1/6", "1/9", "1/864"),
    ("C12", "1/6", "138", "23/16"),
    ("C13", "1/6", "352/9", "11/27"),
    ("C14", "1/6", "1332/13", "111/104"),
    ("C15", "1/3", "64", "4/3"),
    ("C16", "1/3", "536/9", "67/54"),
    ("C17", "1/3", "32/63", "2/189"),
    ("C18", "1/2", "2/3", "1/48"),
    ("C19", "1/2", "23", "23/32"),
    ("C20", "2/3", "8/7", "1/21"),
    ("C21", "1", "4/3", "1/12"),
    ("C22", "7/6", "3", "7/32"),
    ("C23", "5/3", "48/7", "5/7"),
    ("C24", "7/3", "44/9", "77/108"),
    ("C25", "2", "20/3", "5/6"),
    ("C26", "2", "8", "1"),
    ("C27", "2", "32/3", "4/3"),
    ("C28", "19/6", "11", "209/96"),
    ("C29", "2", "96/7", "12/7"),
    ("C30", "23/6", "18", "69/16"),
    ("C31", "-1/21", "-64/7", "1/147"),
    ("C32", "-1/21", "-2408/9", "43/216"),
    ("C33", "-1/9", "-104/27", "13/1944"),
    ("C34", "4/15", "128/45", "2/675"),
    ("C35", "2/3", "12", "1/32"),
    ("C36", "5/6", "411", "685/512"),
    ("C37", "1", "46/3", "23/384"),
    ("C38", "8/5", "160/3", "1/3"),
    ("C39", "8/3", "96", "1"),
    ("C40", "8/3", "928/9", "29/27"),
];

/// Pairs whose `mu` numerator is a power of 3.
pub const FILTERED: [&str; 15] =
    ["C1", "C2", "C3", "C4", "C8", "C10", "C11", "C18", "C20", "C21", "C26", "C31", "C35", "C38", "C39"];

/// `(pair, prime under the anisotropic place, q, chi(Lambda))`.
pub const DIVISION_TABLE: [(&str, u64, u64, &str); 5] =
    [("C2", 2, 4, "1"), ("C10", 2, 2, "3"), ("C18", 3, 3, "1"), ("C31", 2, 8, "9"), ("C39", 2, 2, "9")];

/// `(a, p, covolume of the principal subgroup)` over the rationals.
pub const KQ_PAIRS: [(u64, u64, &str); 5] = [(1, 5, "1"), (2, 3, "1"), (7, 2, "1/7"), (15, 2, "1"), (23, 2, "3")];

/// `(d, root discriminant bound, h3 bound, D_ell / D_k^2 bound)`.
pub const DEGREE_ROWS: [(u32, &str, u64, u64); 4] =
    [(5, "8.3649", 1, 5), (4, "8.3640", 1, 21), (3, "8.3591", 1, 52), (2, "9.5491", 3, 104)];

pub const CONFIRMED_KQ: u64 = 12;
pub const CONFIRMED_C: u64 = 5;
pub const UPPER_TOTAL: u64 = 20;
pub const HERMITIAN_OPEN: [&str; 3] = ["C1", "C11", "C18"];
pub const EXCLUDED: [&str; 3] = ["C21", "C31", "C39"];
