//! Closed-form entries of the type-4 catalog as functions of `(λ₁, λ₂)`.
//! Factor constants are the `c` in `x² + c` or `x⁴ + c`.

use crate::rational::{int, Rational};

/// Critical-value pairs (i)–(x) as branch indices; the pair curve `C_k`
/// comes from the `k`-th entry.
pub const PAIR_ORDER: [[usize; 2]; 10] = [
    [1, 2],
    [1, 3],
    [1, 4],
    [1, 5],
    [2, 3],
    [2, 4],
    [2, 5],
    [3, 4],
    [3, 5],
    [4, 5],
];

/// The printed cover `Q` of each pair, as text at symbolic `λ`.
pub const PAIR_COVERS: [&str; 10] = [
    "z^2",
    "z^2+1",
    "z^2+l1",
    "z^2+l2",
    "1/(z^2+1)",
    "l1/(z^2+1)",
    "l2/(z^2+1)",
    "(z^2+l1)/(z^2+1)",
    "(z^2+l2)/(z^2+1)",
    "(l1*z^2+l2)/(z^2+1)",
];

/// Free rank-1 subgroups `L₁..L₁₀`, each `⟨a_i a_j⟩`.
pub const RANK1_GENERATORS: [[usize; 2]; 10] = PAIR_ORDER;

/// Free rank-2 subgroups `K₁..K₁₀` as pairs of generator index pairs.
pub const RANK2_GENERATORS: [[[usize; 2]; 2]; 10] = [
    [[1, 2], [1, 3]],
    [[1, 2], [1, 4]],
    [[1, 2], [1, 5]],
    [[1, 3], [1, 4]],
    [[1, 3], [1, 5]],
    [[1, 4], [1, 5]],
    [[2, 3], [2, 4]],
    [[2, 3], [2, 5]],
    [[2, 4], [2, 5]],
    [[3, 4], [3, 5]],
];

/// Constants of `C₁..C₁₀`.
pub fn pair_curves(l1: &Rational, l2: &Rational) -> [[Rational; 3]; 10] {
    let one = int(1);
    [
        [one.clone(), l1.clone(), l2.clone()],
        [one.clone(), &one - l1, &one - l2],
        [l1.clone(), l1 - &one, l1 - l2],
        [l2.clone(), l2 - &one, l2 - l1],
        [one.clone(), (l1 - &one) / l1, (l2 - &one) / l1],
        [one.clone(), &one - l1, (l2 - l1) / l2],
        [one.clone(), &one - l2, (l1 - l2) / l1],
        [one.clone(), l1.clone(), (l2 - l1) / (&one - l2)],
        [one.clone(), l2.clone(), (l1 - l2) / (&one - l1)],
        [one.clone(), l2 / l1, (l2 - &one) / (l1 - &one)],
    ]
}

/// Constants of the rescaled `C′₃` and `C′₄`.
pub fn rescaled_curves(l1: &Rational, l2: &Rational) -> [[Rational; 3]; 2] {
    let one = int(1);
    [
        [one.clone(), (l1 - &one) / l1, (l1 - l2) / l1],
        [one.clone(), (l2 - &one) / l2, (l2 - l1) / l2],
    ]
}

/// Third factors recomputed from the covers for the entries whose printed
/// third factor disagrees with them: `(curve number, constant)`.
pub fn corrected_third_factors(l1: &Rational, l2: &Rational) -> [(usize, Rational); 3] {
    let one = int(1);
    [
        (5, (l2 - &one) / l2),
        (8, (l2 - l1) / (l2 - &one)),
        (9, (l1 - l2) / (l1 - &one)),
    ]
}

/// The ten `(a, b)` parameter pairs of the genus-3 family
/// `y² = (x⁴ + 2(1−2a)x² + 1)(x⁴ + 2(1−2b)x² + 1)`.
pub fn triple_pairs(l1: &Rational, l2: &Rational) -> [[Rational; 2]; 10] {
    let one = int(1);
    let m1 = &one - l1;
    let m2 = &one - l2;
    [
        [l1.clone(), l2.clone()],
        [m1.clone(), l2 * &m1 / (l2 - l1)],
        [l1 / (l1 - &one), (l2 - l1) / &m1],
        [l1.recip(), l2 / l1],
        [m2.clone(), l1 * &m2 / (l1 - l2)],
        [l2 / (l2 - &one), (l1 - l2) / &m2],
        [l2.recip(), l1 / l2],
        [&m1 / &m2, l2 * &m1 / (l1 * &m2)],
        [l2 / l1, &m2 / &m1],
        [l1 / l2, l1 * &m2 / (l2 * &m1)],
    ]
}

/// Tower curves over the pair `{λ₁, λ₂}`: `(index of b₃, constants)`.
pub fn tower_curves(l1: &Rational, l2: &Rational) -> [(usize, [Rational; 2]); 3] {
    let one = int(1);
    let q = l2 / l1;
    let r = (l2 - &one) / (l1 - &one);
    [
        (3, [one.clone(), q.clone()]),
        (1, [q, r.clone()]),
        (2, [one, r]),
    ]
}

/// Third roots of the five genus-1 curves `y² = x(x−1)(x−e)`.
pub fn cubic_roots(l1: &Rational, l2: &Rational) -> [Rational; 5] {
    let one = int(1);
    [
        l1 * (l2 - &one) / (l2 * (l1 - &one)),
        (l2 - &one) / (l1 - &one),
        l1 / l2,
        l1.clone(),
        l2.clone(),
    ]
}
