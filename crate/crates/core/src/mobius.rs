//! Möbius maps over `Q ∪ {∞}`, even degree-2 covers `z ↦ M(z²)` and the
//! three-point normalizer.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{domain, Result};
use crate::rational::{int, ExtendedRational, Infinity, Rational};

/// `z ↦ (az + b)/(cz + d)` with `ad − bc ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MobiusMap {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl MobiusMap {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self> {
        if (&a * &d - &b * &c).is_zero() {
            return domain("Möbius matrix is singular");
        }
        Ok(Self { a, b, c, d })
    }

    pub fn identity() -> Self {
        Self {
            a: int(1),
            b: int(0),
            c: int(0),
            d: int(1),
        }
    }

    pub fn entries(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn apply(&self, z: &ExtendedRational) -> ExtendedRational {
        match z {
            Infinity => {
                if self.c.is_zero() {
                    Infinity
                } else {
                    ExtendedRational::Finite(&self.a / &self.c)
                }
            }
            ExtendedRational::Finite(z) => {
                let den = &self.c * z + &self.d;
                if den.is_zero() {
                    Infinity
                } else {
                    ExtendedRational::Finite((&self.a * z + &self.b) / den)
                }
            }
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> Self {
        Self {
            a: &self.a * &other.a + &self.b * &other.c,
            b: &self.a * &other.b + &self.b * &other.d,
            c: &self.c * &other.a + &self.d * &other.c,
            d: &self.c * &other.b + &self.d * &other.d,
        }
    }

    /// Equality as maps, i.e. up to a common scalar.
    pub fn same_map(&self, other: &MobiusMap) -> bool {
        let x = [&self.a, &self.b, &self.c, &self.d];
        let y = [&other.a, &other.b, &other.c, &other.d];
        (0..4).all(|i| (0..4).all(|j| x[i] * y[j] == x[j] * y[i]))
    }

    /// Text of the map with `var` substituted for `z`, e.g. `(2z^2+3)/(z^2+1)`.
    pub fn render(&self, var: &str) -> String {
        let num = linear(&self.a, &self.b, var);
        if self.c.is_zero() {
            let num = if self.d.is_one() {
                num
            } else {
                format!("({num})/{}", self.d)
            };
            return num;
        }
        let den = linear(&self.c, &self.d, var);
        let num = if self.a.is_zero() || self.b.is_zero() {
            num
        } else {
            format!("({num})")
        };
        format!("{num}/({den})")
    }

    pub fn to_record(&self) -> [[String; 2]; 2] {
        [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ]
    }
}

fn linear(coef: &Rational, constant: &Rational, var: &str) -> String {
    let mut s = String::new();
    if !coef.is_zero() {
        if coef.is_one() {
            s.push_str(var);
        } else if *coef == -Rational::one() {
            s.push('-');
            s.push_str(var);
        } else {
            s.push_str(&coef.to_string());
            s.push_str(var);
        }
    }
    if !constant.is_zero() || s.is_empty() {
        if !s.is_empty() && *constant > Rational::zero() {
            s.push('+');
        }
        s.push_str(&constant.to_string());
    }
    s
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("z"))
    }
}

/// The even degree-2 cover `z ↦ post(z²)`, critical at `0` and `∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EvenCover {
    post: MobiusMap,
}

impl EvenCover {
    pub fn new(post: MobiusMap) -> Self {
        Self { post }
    }

    pub fn post(&self) -> &MobiusMap {
        &self.post
    }

    pub fn eval(&self, z: &ExtendedRational) -> ExtendedRational {
        let sq = match z {
            Infinity => Infinity,
            ExtendedRational::Finite(q) => ExtendedRational::Finite(q * q),
        };
        self.post.apply(&sq)
    }

    /// `(cover(∞), cover(0))`.
    pub fn critical_values(&self) -> (ExtendedRational, ExtendedRational) {
        (
            self.post.apply(&Infinity),
            self.post.apply(&ExtendedRational::int(0)),
        )
    }

    /// The `w` with `cover(z) = c ⟺ z² = w`.
    pub fn preimage_square(&self, c: &ExtendedRational) -> Result<ExtendedRational> {
        let (v_inf, v_zero) = self.critical_values();
        if *c == v_inf || *c == v_zero {
            return domain(format!("{c} is a critical value of the cover"));
        }
        Ok(self.post.inverse().apply(c))
    }

    pub fn render(&self) -> String {
        self.post.render("z^2")
    }
}

/// Normal form of the even cover with `Q(∞) = b1`, `Q(0) = b2`:
/// `(b1·z² + b2)/(z² + 1)` for finite values, `z² + b2` when `b1 = ∞`.
pub fn pair_cover(b1: &ExtendedRational, b2: &ExtendedRational) -> Result<EvenCover> {
    if b1 == b2 {
        return domain(format!("pair cover needs distinct values, got {b1} twice"));
    }
    let post = match (b1, b2) {
        (Infinity, ExtendedRational::Finite(v)) => {
            MobiusMap::new(int(1), v.clone(), int(0), int(1))?
        }
        (ExtendedRational::Finite(u), Infinity) => {
            MobiusMap::new(u.clone(), int(1), int(1), int(0))?
        }
        (ExtendedRational::Finite(u), ExtendedRational::Finite(v)) => {
            MobiusMap::new(u.clone(), v.clone(), int(1), int(1))?
        }
        (Infinity, Infinity) => unreachable!("equal values rejected above"),
    };
    Ok(EvenCover::new(post))
}

/// `T` with `T(b1) = ∞`, `T(b2) = 0`, `T(b3) = 1`.
pub fn triple_normalizer(
    b1: &ExtendedRational,
    b2: &ExtendedRational,
    b3: &ExtendedRational,
) -> Result<MobiusMap> {
    if b1 == b2 || b2 == b3 || b1 == b3 {
        return domain(format!("normalizer needs distinct points, got {b1}, {b2}, {b3}"));
    }
    use ExtendedRational::Finite as F;
    match (b1, b2, b3) {
        (Infinity, F(p), F(r)) => MobiusMap::new(int(1), -p.clone(), int(0), r - p),
        (F(o), Infinity, F(r)) => MobiusMap::new(int(0), r - o, int(1), -o.clone()),
        (F(o), F(p), Infinity) => MobiusMap::new(int(1), -p.clone(), int(1), -o.clone()),
        (F(o), F(p), F(r)) => {
            let s = r - o;
            let t = r - p;
            MobiusMap::new(s.clone(), -(p * &s), t.clone(), -(o * &t))
        }
        _ => unreachable!("at most one point is infinite"),
    }
}

/// `{μ, 1−μ, 1/μ, 1/(1−μ), (μ−1)/μ, μ/(μ−1)}`, deduplicated and sorted.
pub fn cross_ratio_orbit(mu: &ExtendedRational) -> Result<Vec<Rational>> {
    let m = match mu {
        ExtendedRational::Finite(m) if !m.is_zero() && !m.is_one() => m.clone(),
        _ => return domain(format!("cross-ratio orbit undefined at {mu}")),
    };
    let one = int(1);
    let set: BTreeSet<Rational> = [
        m.clone(),
        &one - &m,
        m.recip(),
        (&one - &m).recip(),
        (&m - &one) / &m,
        &m / (&m - &one),
    ]
    .into_iter()
    .collect();
    Ok(set.into_iter().collect())
}

/// Smallest orbit member; equal keys ⟺ same orbit.
pub fn cross_ratio_key(mu: &ExtendedRational) -> Result<Rational> {
    Ok(cross_ratio_orbit(mu)?.swap_remove(0))
}

#[derive(Serialize)]
pub struct MobiusRecord {
    pub matrix: [[String; 2]; 2],
    pub text: String,
}

impl From<&MobiusMap> for MobiusRecord {
    fn from(m: &MobiusMap) -> Self {
        Self {
            matrix: m.to_record(),
            text: m.render("z"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn e(v: i64) -> ExtendedRational {
        ExtendedRational::int(v)
    }

    fn er(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::ratio(n, d)
    }

    #[test]
    fn singular_rejected() {
        assert!(MobiusMap::new(int(1), int(2), int(2), int(4)).is_err());
    }

    #[test]
    fn apply_handles_infinity() {
        let m = MobiusMap::new(int(2), int(3), int(1), int(1)).unwrap();
        assert_eq!(m.apply(&Infinity), e(2));
        assert_eq!(m.apply(&e(-1)), Infinity);
        assert_eq!(m.apply(&e(0)), e(3));
        let aff = MobiusMap::new(int(1), int(1), int(0), int(1)).unwrap();
        assert_eq!(aff.apply(&Infinity), Infinity);
    }

    #[test]
    fn inverse_and_compose() {
        let m = MobiusMap::new(int(2), int(3), int(1), int(1)).unwrap();
        assert!(m.compose(&m.inverse()).same_map(&MobiusMap::identity()));
        for v in [Infinity, e(0), e(5), er(-7, 3)] {
            assert_eq!(m.inverse().apply(&m.apply(&v)), v);
        }
    }

    #[test]
    fn pair_cover_examples() {
        let c = pair_cover(&e(2), &e(3)).unwrap();
        assert_eq!(c.render(), "(2z^2+3)/(z^2+1)");
        assert_eq!(c.critical_values(), (e(2), e(3)));
        let c = pair_cover(&Infinity, &e(0)).unwrap();
        assert_eq!(c.render(), "z^2");
        assert_eq!(c.critical_values(), (Infinity, e(0)));
        let c = pair_cover(&e(0), &e(1)).unwrap();
        assert_eq!(c.render(), "1/(z^2+1)");
        assert_eq!(pair_cover(&Infinity, &e(1)).unwrap().render(), "z^2+1");
        assert!(pair_cover(&e(2), &e(2)).is_err());
        // reversed infinite pair still has the requested critical values
        let c = pair_cover(&e(4), &Infinity).unwrap();
        assert_eq!(c.critical_values(), (e(4), Infinity));
    }

    #[test]
    fn covers_are_even() {
        let c = pair_cover(&e(2), &e(3)).unwrap();
        for z in [e(1), er(3, 7), e(-5)] {
            let neg = ExtendedRational::Finite(-z.as_finite().unwrap().clone());
            assert_eq!(c.eval(&z), c.eval(&neg));
        }
    }

    #[test]
    fn preimage_square_examples() {
        let c = pair_cover(&e(2), &e(3)).unwrap();
        assert_eq!(c.preimage_square(&Infinity).unwrap(), e(-1));
        assert_eq!(c.preimage_square(&e(0)).unwrap(), er(-3, 2));
        let sq = pair_cover(&Infinity, &e(0)).unwrap();
        assert_eq!(sq.preimage_square(&e(2)).unwrap(), e(2));
        assert!(c.preimage_square(&e(2)).is_err());
        assert!(c.preimage_square(&e(3)).is_err());
    }

    #[test]
    fn normalizer_examples() {
        let t = triple_normalizer(&Infinity, &e(0), &e(1)).unwrap();
        assert!(t.same_map(&MobiusMap::identity()));
        let t = triple_normalizer(&e(1), &e(2), &e(3)).unwrap();
        assert_eq!(t.apply(&e(1)), Infinity);
        assert_eq!(t.apply(&e(2)), e(0));
        assert_eq!(t.apply(&e(3)), e(1));
        // 2(z-2)/(z-1)
        assert!(t.same_map(&MobiusMap::new(int(2), int(-4), int(1), int(-1)).unwrap()));
        let t = triple_normalizer(&Infinity, &e(0), &e(2)).unwrap();
        assert!(t.same_map(&MobiusMap::new(int(1), int(0), int(0), int(2)).unwrap()));
        assert!(triple_normalizer(&e(1), &e(1), &e(2)).is_err());
    }

    #[test]
    fn normalizer_all_positions_of_infinity() {
        let pts = [Infinity, e(0), e(1), e(5)];
        for i in 0..4 {
            for j in 0..4 {
                for k in 0..4 {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let t = triple_normalizer(&pts[i], &pts[j], &pts[k]).unwrap();
                    assert_eq!(t.apply(&pts[i]), Infinity);
                    assert_eq!(t.apply(&pts[j]), e(0));
                    assert_eq!(t.apply(&pts[k]), e(1));
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            cross_ratio_orbit(&e(2)).unwrap(),
            vec![int(-1), ratio(1, 2), int(2)]
        );
        let mut want = vec![int(3), int(-2), ratio(1, 3), ratio(-1, 2), ratio(2, 3), ratio(3, 2)];
        want.sort();
        assert_eq!(cross_ratio_orbit(&e(3)).unwrap(), want);
        assert_eq!(cross_ratio_orbit(&er(1, 2)).unwrap().len(), 3);
        for bad in [Infinity, e(0), e(1)] {
            assert!(cross_ratio_orbit(&bad).is_err());
        }
    }

    #[test]
    fn render_forms() {
        let m = MobiusMap::new(int(2), int(-4), int(1), int(-1)).unwrap();
        assert_eq!(m.render("z"), "(2z-4)/(z-1)");
        let m = MobiusMap::new(int(1), int(0), int(0), int(2)).unwrap();
        assert_eq!(m.render("z"), "(z)/2");
    }
}
