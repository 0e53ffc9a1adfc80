//! Exact hyperelliptic equations of the quotient families and their
//! self-check against the defining covers.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::mobius::{pair_cover, triple_normalizer, EvenCover, MobiusMap};
use crate::rational::{int, parse_rational, ExtendedRational, Infinity, Rational};

/// The branch values `(∞, 0, 1, λ₁, …, λ_{n−2})`, addressed by 1-based index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchSet {
    values: Vec<ExtendedRational>,
}

impl BranchSet {
    pub fn new(lambdas: &[Rational]) -> Result<Self> {
        let n = lambdas.len() + 2;
        if n < 4 {
            return domain(format!(
                "need at least 2 parameters (type n ≥ 4), got {}",
                lambdas.len()
            ));
        }
        let mut values = vec![Infinity, ExtendedRational::int(0), ExtendedRational::int(1)];
        values.extend(lambdas.iter().cloned().map(ExtendedRational::Finite));
        let distinct: BTreeSet<_> = values.iter().collect();
        if distinct.len() != values.len() {
            return domain("branch values must be pairwise distinct and avoid 0, 1");
        }
        Ok(Self { values })
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[ExtendedRational] {
        &self.values
    }

    pub fn lambdas(&self) -> Vec<Rational> {
        self.values[3..]
            .iter()
            .map(|v| v.as_finite().expect("λ's are finite").clone())
            .collect()
    }

    /// `B_i`, `1 ≤ i ≤ n+1`.
    pub fn value(&self, i: usize) -> Result<&ExtendedRational> {
        if i == 0 || i > self.values.len() {
            return domain(format!("branch index {i} outside 1..={}", self.values.len()));
        }
        Ok(&self.values[i - 1])
    }

    fn check_selection(&self, indices: &[usize]) -> Result<()> {
        for &i in indices {
            self.value(i)?;
        }
        let set: BTreeSet<_> = indices.iter().collect();
        if set.len() != indices.len() {
            return domain(format!("branch indices {indices:?} collide"));
        }
        Ok(())
    }

    fn remaining(&self, omitted: &[usize]) -> Vec<(usize, ExtendedRational)> {
        (1..=self.values.len())
            .filter(|i| !omitted.contains(i))
            .map(|i| (i, self.values[i - 1].clone()))
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EquationShape {
    /// `∏ (x − r)`.
    RootList,
    /// `∏ (x² − s)`.
    EvenQuadratics,
    /// `∏ (x⁴ + 2(1 − 2μ)x² + 1)`.
    EvenQuarticsMu,
    /// `∏ (x⁴ − w)`.
    EvenQuarticsW,
}

impl EquationShape {
    pub fn name(&self) -> &'static str {
        match self {
            Self::RootList => "ROOT_LIST",
            Self::EvenQuadratics => "EVEN_QUADRATICS",
            Self::EvenQuarticsMu => "EVEN_QUARTICS_MU",
            Self::EvenQuarticsW => "EVEN_QUARTICS_W",
        }
    }
}

/// `y² = f(x)` with `f` a product of factors of one shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperellipticEquation {
    shape: EquationShape,
    data: Vec<Rational>,
    genus: i64,
}

impl HyperellipticEquation {
    pub fn new(shape: EquationShape, data: Vec<Rational>) -> Result<Self> {
        if data.is_empty() {
            return domain("equation needs at least one factor");
        }
        let distinct: BTreeSet<_> = data.iter().collect();
        if distinct.len() != data.len() {
            return domain("factor constants must be distinct");
        }
        let bad = match shape {
            EquationShape::RootList => None,
            EquationShape::EvenQuadratics => data.iter().find(|s| s.is_zero()),
            EquationShape::EvenQuarticsW => data.iter().find(|w| w.is_zero()),
            EquationShape::EvenQuarticsMu => data.iter().find(|m| m.is_zero() || m.is_one()),
        };
        if let Some(v) = bad {
            return domain(format!("factor constant {v} gives a repeated root"));
        }
        let branch = branch_count(shape, data.len());
        if branch % 2 != 0 {
            return domain("odd number of branch points");
        }
        Ok(Self {
            shape,
            genus: branch as i64 / 2 - 1,
            data,
        })
    }

    pub fn shape(&self) -> EquationShape {
        self.shape
    }

    pub fn data(&self) -> &[Rational] {
        &self.data
    }

    pub fn genus(&self) -> i64 {
        self.genus
    }

    pub fn branch_count(&self) -> usize {
        branch_count(self.shape, self.data.len())
    }

    pub fn factor_texts(&self) -> Vec<String> {
        self.data.iter().map(|c| factor_text(self.shape, c)).collect()
    }

    pub fn to_record(&self) -> EquationRecord {
        EquationRecord {
            shape: self.shape,
            genus: self.genus,
            factors: self.data.iter().map(|c| c.to_string()).collect(),
        }
    }

    /// Decode and validate a JSON equation record.
    pub fn from_json(text: &str) -> Result<Self> {
        let rec: EquationRecord =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        rec.try_into()
    }
}

fn branch_count(shape: EquationShape, factors: usize) -> usize {
    match shape {
        EquationShape::RootList => factors + factors % 2,
        EquationShape::EvenQuadratics => 2 * factors,
        EquationShape::EvenQuarticsMu | EquationShape::EvenQuarticsW => 4 * factors,
    }
}

fn signed_term(v: &Rational) -> String {
    if v.is_negative() {
        format!("-{}", -v)
    } else {
        format!("+{v}")
    }
}

fn factor_text(shape: EquationShape, c: &Rational) -> String {
    match shape {
        EquationShape::RootList if c.is_zero() => "x".to_string(),
        EquationShape::RootList => format!("(x{})", signed_term(&-c)),
        EquationShape::EvenQuadratics => format!("(x^2{})", signed_term(&-c)),
        EquationShape::EvenQuarticsW => format!("(x^4{})", signed_term(&-c)),
        EquationShape::EvenQuarticsMu => {
            let k = int(2) - int(4) * c;
            let mid = if k.is_zero() {
                String::new()
            } else if k.is_one() {
                "+x^2".to_string()
            } else if k == -Rational::one() {
                "-x^2".to_string()
            } else {
                format!("{}x^2", signed_term(&k))
            };
            format!("(x^4{mid}+1)")
        }
    }
}

impl fmt::Display for HyperellipticEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = {}", self.factor_texts().concat())
    }
}

/// Wire form: exact rational strings, never floats.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquationRecord {
    pub shape: EquationShape,
    pub genus: i64,
    pub factors: Vec<String>,
}

impl TryFrom<EquationRecord> for HyperellipticEquation {
    type Error = Error;

    fn try_from(rec: EquationRecord) -> Result<Self> {
        let data = rec
            .factors
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        let eq = Self::new(rec.shape, data)?;
        if eq.genus != rec.genus {
            return domain(format!(
                "declared genus {} disagrees with branch count (genus {})",
                rec.genus, eq.genus
            ));
        }
        Ok(eq)
    }
}

/// The map under which each factor parameter is pushed to a branch value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverMap {
    /// `z ↦ post(z²)`; a factor `x² − s` lies over `post(s)`.
    Quadratic(EvenCover),
    /// `z ↦ post(z⁴)`; a factor `x⁴ − w` lies over `post(w)`.
    Quartic(EvenCover),
    /// Normalizer `T`; a parameter `μ` (or root) lies over `T⁻¹(μ)`.
    Normalized(MobiusMap),
}

impl CoverMap {
    pub fn kind(&self) -> &'static str {
        match self {
            Self::Quadratic(_) => "quadratic",
            Self::Quartic(_) => "quartic",
            Self::Normalized(_) => "normalizer",
        }
    }

    pub fn text(&self) -> String {
        match self {
            Self::Quadratic(c) => c.post().render("z^2"),
            Self::Quartic(c) => c.post().render("z^4"),
            Self::Normalized(t) => t.render("z"),
        }
    }

    pub fn matrix(&self) -> &MobiusMap {
        match self {
            Self::Quadratic(c) | Self::Quartic(c) => c.post(),
            Self::Normalized(t) => t,
        }
    }
}

/// Push every factor forward and compare with `expected` as exact multisets.
pub fn verify_cover_consistency(
    eq: &HyperellipticEquation,
    cover: &CoverMap,
    expected: &[ExtendedRational],
) -> Result<bool> {
    let lift = |v: &Rational| ExtendedRational::Finite(v.clone());
    let mut images: Vec<ExtendedRational> = match (cover, eq.shape) {
        (CoverMap::Quadratic(c), EquationShape::EvenQuadratics)
        | (CoverMap::Quartic(c), EquationShape::EvenQuarticsW) => {
            eq.data.iter().map(|s| c.post().apply(&lift(s))).collect()
        }
        (CoverMap::Normalized(t), EquationShape::EvenQuarticsMu) => {
            let inv = t.inverse();
            eq.data.iter().map(|m| inv.apply(&lift(m))).collect()
        }
        (CoverMap::Normalized(t), EquationShape::RootList) => {
            let inv = t.inverse();
            let mut v: Vec<_> = eq.data.iter().map(|r| inv.apply(&lift(r))).collect();
            if eq.data.len() % 2 == 1 {
                v.push(inv.apply(&Infinity));
            }
            v
        }
        _ => {
            return domain(format!(
                "{} cover does not match shape {}",
                cover.kind(),
                eq.shape.name()
            ))
        }
    };
    let mut want = expected.to_vec();
    images.sort();
    want.sort();
    Ok(images == want)
}

/// `σ` with `{s of eq2} = {σ·s of eq1}`; quartic-μ equations compare exactly.
pub fn equal_up_to_scaling(
    eq1: &HyperellipticEquation,
    eq2: &HyperellipticEquation,
) -> Result<Option<Rational>> {
    if eq1.shape != eq2.shape {
        return domain(format!(
            "cannot compare {} with {}",
            eq1.shape.name(),
            eq2.shape.name()
        ));
    }
    let sorted = |v: &[Rational]| {
        let mut v = v.to_vec();
        v.sort();
        v
    };
    match eq1.shape {
        EquationShape::RootList => domain("scaling comparison needs even-factor shapes"),
        EquationShape::EvenQuarticsMu => Ok((sorted(&eq1.data) == sorted(&eq2.data)).then(int1)),
        EquationShape::EvenQuadratics | EquationShape::EvenQuarticsW => {
            if eq1.data.len() != eq2.data.len() {
                return Ok(None);
            }
            let target = sorted(&eq2.data);
            let base = &eq1.data[0];
            let hits: Vec<Rational> = eq2
                .data
                .iter()
                .map(|t| t / base)
                .filter(|sigma| {
                    let scaled: Vec<_> = eq1.data.iter().map(|s| s * sigma).collect();
                    sorted(&scaled) == target
                })
                .collect();
            Ok(hits
                .iter()
                .find(|s| s.is_positive())
                .or(hits.first())
                .cloned())
        }
    }
}

fn int1() -> Rational {
    int(1)
}

/// Which quotient family an equation belongs to, with its index selection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    Pair { omitted: [usize; 2] },
    Triple { omitted: [usize; 3] },
    Tower { omitted: [usize; 2], b3: usize },
    FullRank,
    SingleOmission { omitted: usize },
}

/// An emitted equation together with the data that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientCurve {
    pub family: Family,
    pub equation: HyperellipticEquation,
    pub cover: CoverMap,
    pub expected: Vec<ExtendedRational>,
}

impl QuotientCurve {
    pub fn verify(&self) -> Result<bool> {
        verify_cover_consistency(&self.equation, &self.cover, &self.expected)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rec = self.equation.to_record();
        serde_json::json!({
            "selection": self.family,
            "shape": rec.shape,
            "genus": rec.genus,
            "factors": rec.factors,
            "equation": self.equation.to_string(),
            "cover": {
                "kind": self.cover.kind(),
                "map": self.cover.text(),
                "matrix": self.cover.matrix().to_record(),
                "expected": self.expected.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            },
        })
    }
}

fn sorted_pair(p: usize, q: usize) -> [usize; 2] {
    [p.min(q), p.max(q)]
}

fn values_of(rest: &[(usize, ExtendedRational)]) -> Vec<ExtendedRational> {
    rest.iter().map(|(_, v)| v.clone()).collect()
}

fn finite(v: ExtendedRational, what: &str) -> Result<Rational> {
    match v {
        ExtendedRational::Finite(q) => Ok(q),
        Infinity => domain(format!("{what} landed at ∞")),
    }
}

/// Genus `n−2` quotient attached to the omitted pair `{p, q}`.
pub fn pair_quotient_curve(branch: &BranchSet, p: usize, q: usize) -> Result<QuotientCurve> {
    branch.check_selection(&[p, q])?;
    let [p, q] = sorted_pair(p, q);
    let cover = pair_cover(branch.value(p)?, branch.value(q)?)?;
    let rest = branch.remaining(&[p, q]);
    let data = rest
        .iter()
        .map(|(_, b)| finite(cover.preimage_square(b)?, "root square"))
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientCurve {
        family: Family::Pair { omitted: [p, q] },
        equation: HyperellipticEquation::new(EquationShape::EvenQuadratics, data)?,
        cover: CoverMap::Quadratic(cover),
        expected: values_of(&rest),
    })
}

/// Genus `2n−5` quotient attached to an index triple, in `μ = T(B)` form.
pub fn triple_quotient_curve(branch: &BranchSet, triple: [usize; 3]) -> Result<QuotientCurve> {
    branch.check_selection(&triple)?;
    let mut t = triple;
    t.sort_unstable();
    let norm = triple_normalizer(branch.value(t[0])?, branch.value(t[1])?, branch.value(t[2])?)?;
    let rest = branch.remaining(&t);
    let data = rest
        .iter()
        .map(|(_, b)| finite(norm.apply(b), "normalized value"))
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientCurve {
        family: Family::Triple { omitted: t },
        equation: HyperellipticEquation::new(EquationShape::EvenQuarticsMu, data)?,
        cover: CoverMap::Normalized(norm),
        expected: values_of(&rest),
    })
}

/// Genus `2n−5` tower quotient: the pair cover composed with `z ↦ z²`,
/// with the value `B_r` dropped from the branch data.
pub fn tower_quartic_curve(
    branch: &BranchSet,
    p: usize,
    q: usize,
    r: usize,
) -> Result<QuotientCurve> {
    branch.check_selection(&[p, q, r])?;
    let [p, q] = sorted_pair(p, q);
    let cover = pair_cover(branch.value(p)?, branch.value(q)?)?;
    let rest = branch.remaining(&[p, q, r]);
    let data = rest
        .iter()
        .map(|(_, b)| finite(cover.preimage_square(b)?, "fourth power"))
        .collect::<Result<Vec<_>>>()?;
    Ok(QuotientCurve {
        family: Family::Tower {
            omitted: [p, q],
            b3: r,
        },
        equation: HyperellipticEquation::new(EquationShape::EvenQuarticsW, data)?,
        cover: CoverMap::Quartic(cover),
        expected: values_of(&rest),
    })
}

/// Genus `(n−1)/2` quotient by the unique free subgroup of rank `n−1` (n odd).
pub fn full_rank_quotient_curve(branch: &BranchSet) -> Result<QuotientCurve> {
    let n = branch.n();
    if n % 2 == 0 {
        return domain(format!(
            "type n = {n} is even: every rank {} subgroup acts non-freely",
            n - 1
        ));
    }
    let mut data = vec![int(0), int(1)];
    data.extend(branch.lambdas());
    Ok(QuotientCurve {
        family: Family::FullRank,
        equation: HyperellipticEquation::new(EquationShape::RootList, data)?,
        cover: CoverMap::Normalized(MobiusMap::identity()),
        expected: branch.values().to_vec(),
    })
}

/// Genus `(n−2)/2` curve branched over all values except `B_p` (n even).
pub fn single_omission_curve(branch: &BranchSet, p: usize) -> Result<QuotientCurve> {
    let n = branch.n();
    if n % 2 == 1 {
        return domain(format!(
            "type n = {n} is odd: {n} remaining points give no integral genus"
        ));
    }
    branch.check_selection(&[p])?;
    let rest = branch.remaining(&[p]);
    let norm = triple_normalizer(&rest[0].1, &rest[1].1, &rest[2].1)?;
    let mut data = vec![int(0), int(1)];
    for (_, b) in &rest[3..] {
        data.push(finite(norm.apply(b), "normalized value")?);
    }
    Ok(QuotientCurve {
        family: Family::SingleOmission { omitted: p },
        equation: HyperellipticEquation::new(EquationShape::RootList, data)?,
        cover: CoverMap::Normalized(norm),
        expected: values_of(&rest),
    })
}

/// Every curve of every family applicable to type `n`, in a fixed order:
/// triples, pairs, towers, then the full-rank or single-omission curves.
pub fn all_quotient_curves(branch: &BranchSet) -> Result<Vec<QuotientCurve>> {
    let m = branch.n() + 1;
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in j + 1..=m {
                out.push(triple_quotient_curve(branch, [i, j, k])?);
            }
        }
    }
    for p in 1..=m {
        for q in p + 1..=m {
            out.push(pair_quotient_curve(branch, p, q)?);
        }
    }
    for p in 1..=m {
        for q in p + 1..=m {
            for r in (1..=m).filter(|&r| r != p && r != q) {
                out.push(tower_quartic_curve(branch, p, q, r)?);
            }
        }
    }
    if branch.n() % 2 == 1 {
        out.push(full_rank_quotient_curve(branch)?);
    } else {
        for p in 1..=m {
            out.push(single_omission_curve(branch, p)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::cross_ratio_orbit;
    use crate::rational::ratio;

    fn bs(l: &[(i64, i64)]) -> BranchSet {
        BranchSet::new(&l.iter().map(|&(a, b)| ratio(a, b)).collect::<Vec<_>>()).unwrap()
    }

    fn b23() -> BranchSet {
        bs(&[(2, 1), (3, 1)])
    }

    fn rs(v: &[(i64, i64)]) -> Vec<Rational> {
        v.iter().map(|&(a, b)| ratio(a, b)).collect()
    }

    #[test]
    fn branch_set_validation() {
        assert!(BranchSet::new(&rs(&[(2, 1), (2, 1)])).is_err());
        assert!(BranchSet::new(&rs(&[(1, 1), (2, 1)])).is_err());
        assert!(BranchSet::new(&rs(&[(0, 1), (2, 1)])).is_err());
        assert!(BranchSet::new(&rs(&[(2, 1)])).is_err());
        let b = b23();
        assert_eq!(b.n(), 4);
        assert_eq!(*b.value(1).unwrap(), Infinity);
        assert!(b.value(6).is_err());
    }

    #[test]
    fn pair_examples() {
        let b = b23();
        let c = pair_quotient_curve(&b, 4, 5).unwrap();
        assert_eq!(c.equation.data(), rs(&[(-1, 1), (-3, 2), (-2, 1)]));
        assert_eq!(c.equation.genus(), 2);
        assert_eq!(c.equation.to_string(), "y^2 = (x^2+1)(x^2+3/2)(x^2+2)");
        assert!(c.verify().unwrap());
        let c = pair_quotient_curve(&b, 1, 2).unwrap();
        assert_eq!(c.equation.data(), rs(&[(1, 1), (2, 1), (3, 1)]));
        let c = pair_quotient_curve(&b, 4, 3).unwrap();
        let mut d = c.equation.data().to_vec();
        d.sort();
        assert_eq!(d, rs(&[(-2, 1), (-1, 1), (-1, 2)]));
        assert!(pair_quotient_curve(&b, 2, 2).is_err());
        assert!(pair_quotient_curve(&b, 0, 2).is_err());
    }

    #[test]
    fn perturbed_factor_fails_consistency() {
        let c = pair_quotient_curve(&b23(), 4, 5).unwrap();
        let bad = HyperellipticEquation::new(
            EquationShape::EvenQuadratics,
            rs(&[(-1, 1), (-5, 2), (-2, 1)]),
        )
        .unwrap();
        assert!(!verify_cover_consistency(&bad, &c.cover, &c.expected).unwrap());
    }

    #[test]
    fn shape_mismatch_is_error() {
        let c = pair_quotient_curve(&b23(), 4, 5).unwrap();
        let t = triple_quotient_curve(&b23(), [1, 2, 3]).unwrap();
        assert!(verify_cover_consistency(&t.equation, &c.cover, &c.expected).is_err());
        assert!(equal_up_to_scaling(&t.equation, &c.equation).is_err());
    }

    #[test]
    fn triple_examples() {
        let b = b23();
        let c = triple_quotient_curve(&b, [1, 2, 3]).unwrap();
        assert_eq!(c.equation.data(), rs(&[(2, 1), (3, 1)]));
        assert_eq!(c.equation.to_string(), "y^2 = (x^4-6x^2+1)(x^4-10x^2+1)");
        assert_eq!(c.equation.genus(), 3);
        let c = triple_quotient_curve(&b, [1, 2, 4]).unwrap();
        assert_eq!(c.equation.data(), rs(&[(1, 2), (3, 2)]));
        assert_eq!(c.equation.to_string(), "y^2 = (x^4+1)(x^4-4x^2+1)");
        let c = triple_quotient_curve(&b, [5, 3, 4]).unwrap();
        assert_eq!(c.equation.data(), rs(&[(2, 1), (4, 1)]));
        assert!(c.verify().unwrap());
    }

    #[test]
    fn quartic_factor_is_solution_set_of_u() {
        // ((1+x²)/2x)² = μ  ⟺  x⁴ + 2(1−2μ)x² + 1 = 0, checked on x = 2, μ = U(2)
        let x = int(2);
        let u = {
            let v = (int(1) + &x * &x) / (int(2) * &x);
            &v * &v
        };
        let val = &x * &x * &x * &x + int(2) * (int(1) - int(2) * &u) * &x * &x + int(1);
        assert!(val.is_zero());
    }

    #[test]
    fn tower_examples() {
        let b = b23();
        let c = tower_quartic_curve(&b, 4, 5, 3).unwrap();
        assert_eq!(c.equation.data(), rs(&[(-1, 1), (-3, 2)]));
        assert_eq!(c.equation.to_string(), "y^2 = (x^4+1)(x^4+3/2)");
        assert_eq!(c.cover.text(), "(2z^4+3)/(z^4+1)");
        assert!(c.verify().unwrap());
        let c = tower_quartic_curve(&b, 4, 5, 1).unwrap();
        assert_eq!(c.equation.data(), rs(&[(-3, 2), (-2, 1)]));
        let c = tower_quartic_curve(&b, 4, 5, 2).unwrap();
        assert_eq!(c.equation.data(), rs(&[(-1, 1), (-2, 1)]));
        assert!(tower_quartic_curve(&b, 4, 5, 5).is_err());
    }

    #[test]
    fn full_rank_examples() {
        let c = full_rank_quotient_curve(&bs(&[(2, 1), (3, 1), (5, 1)])).unwrap();
        assert_eq!(c.equation.data(), rs(&[(0, 1), (1, 1), (2, 1), (3, 1), (5, 1)]));
        assert_eq!(c.equation.genus(), 2);
        assert!(c.verify().unwrap());
        let c = full_rank_quotient_curve(&bs(&[(2, 1), (3, 1), (5, 1), (7, 1), (11, 1)])).unwrap();
        assert_eq!(c.equation.genus(), 3);
        assert!(full_rank_quotient_curve(&b23()).is_err());
    }

    #[test]
    fn single_omission_examples() {
        let b = b23();
        let c = single_omission_curve(&b, 5).unwrap();
        assert_eq!(c.equation.data(), rs(&[(0, 1), (1, 1), (2, 1)]));
        assert_eq!(c.equation.to_string(), "y^2 = x(x-1)(x-2)");
        assert_eq!(c.equation.genus(), 1);
        let c = single_omission_curve(&b, 4).unwrap();
        assert_eq!(c.equation.data(), rs(&[(0, 1), (1, 1), (3, 1)]));
        let c = single_omission_curve(&b, 1).unwrap();
        assert_eq!(c.equation.data(), rs(&[(0, 1), (1, 1), (4, 3)]));
        assert!(c.verify().unwrap());
        assert!(single_omission_curve(&bs(&[(2, 1), (3, 1), (5, 1)]), 1).is_err());
    }

    #[test]
    fn scaling_examples() {
        let q = |v: &[(i64, i64)]| {
            HyperellipticEquation::new(EquationShape::EvenQuadratics, rs(v)).unwrap()
        };
        let a = q(&[(-1, 1), (-3, 2), (-2, 1)]);
        let b = q(&[(1, 1), (3, 2), (2, 1)]);
        assert_eq!(equal_up_to_scaling(&a, &b).unwrap(), Some(int(-1)));
        assert_eq!(equal_up_to_scaling(&a, &a).unwrap(), Some(int(1)));
        let c = q(&[(1, 1), (2, 1), (3, 1)]);
        let d = q(&[(1, 1), (2, 1), (4, 1)]);
        assert_eq!(equal_up_to_scaling(&c, &d).unwrap(), None);
        // a symmetric set picks the positive scalar
        let e = q(&[(-1, 1), (1, 1), (2, 1), (-2, 1)]);
        let f = q(&[(-2, 1), (2, 1), (4, 1), (-4, 1)]);
        assert_eq!(equal_up_to_scaling(&e, &f).unwrap(), Some(int(2)));
        assert_eq!(equal_up_to_scaling(&f, &e).unwrap(), Some(ratio(1, 2)));
    }

    #[test]
    fn triple_ordering_invariant_mod_cross_ratio() {
        let b = b23();
        let vals = b.values().to_vec();
        let idx = [2usize, 4, 5];
        let key = |mus: Vec<Rational>| {
            let mut v: Vec<_> = mus
                .into_iter()
                .map(|m| cross_ratio_orbit(&ExtendedRational::Finite(m)).unwrap())
                .collect();
            v.sort();
            v
        };
        let base = key(triple_quotient_curve(&b, idx).unwrap().equation.data().to_vec());
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            let t = triple_normalizer(
                &vals[idx[p[0]] - 1],
                &vals[idx[p[1]] - 1],
                &vals[idx[p[2]] - 1],
            )
            .unwrap();
            let mus: Vec<Rational> = b
                .remaining(&idx)
                .iter()
                .map(|(_, v)| t.apply(v).as_finite().unwrap().clone())
                .collect();
            assert_eq!(key(mus), base);
        }
    }

    #[test]
    fn every_curve_is_consistent_and_counted() {
        for lambdas in [rs(&[(2, 1), (3, 1)]), rs(&[(2, 1), (3, 1), (5, 1)]), rs(&[(-1, 1), (2, 1), (1, 2), (7, 3)])] {
            let b = BranchSet::new(&lambdas).unwrap();
            let n = b.n() as i64;
            for c in all_quotient_curves(&b).unwrap() {
                assert!(c.verify().unwrap(), "{:?}", c.family);
                let eq = &c.equation;
                assert_eq!(eq.branch_count() as i64, 2 * eq.genus() + 2);
                let want = match c.family {
                    Family::Pair { .. } => n - 2,
                    Family::Triple { .. } | Family::Tower { .. } => 2 * n - 5,
                    Family::FullRank => (n - 1) / 2,
                    Family::SingleOmission { .. } => (n - 2) / 2,
                };
                assert_eq!(eq.genus(), want);
            }
        }
    }

    #[test]
    fn json_roundtrip() {
        let c = pair_quotient_curve(&b23(), 4, 5).unwrap();
        let text = serde_json::to_string(&c.equation.to_record()).unwrap();
        assert_eq!(
            text,
            r#"{"shape":"EVEN_QUADRATICS","genus":2,"factors":["-1","-3/2","-2"]}"#
        );
        assert_eq!(HyperellipticEquation::from_json(&text).unwrap(), c.equation);
        assert!(HyperellipticEquation::from_json(
            r#"{"shape":"EVEN_QUADRATICS","genus":3,"factors":["-1","-3/2","-2"]}"#
        )
        .is_err());
        assert!(HyperellipticEquation::from_json(
            r#"{"shape":"EVEN_QUARTICS_MU","genus":1,"factors":["1"]}"#
        )
        .is_err());
        assert!(HyperellipticEquation::from_json("[").is_err());
    }

    #[test]
    fn mu_rendering_edge_cases() {
        let e = HyperellipticEquation::new(EquationShape::EvenQuarticsMu, rs(&[(1, 4), (3, 4)]))
            .unwrap();
        assert_eq!(e.to_string(), "y^2 = (x^4+x^2+1)(x^4-x^2+1)");
    }
}
