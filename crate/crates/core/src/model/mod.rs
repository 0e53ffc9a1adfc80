//! Numeric model of the Humbert curve as an intersection of diagonal
//! quadrics in `P^n`, with the coordinate sign action and the projection
//! `π = −(x₂/x₁)²`.

pub mod complex;

use astro_float::BigFloat;

pub use complex::{render_real, Arith, Complex};

use crate::error::{domain, Error, Result};
use crate::moduli::ParameterTuple;
use crate::rational::{ExtendedRational, Rational};

pub const DEFAULT_BITS: usize = 128;
pub const PRECISION_ENV: &str = "HUMBERT_PRECISION_BITS";

/// Working precision and residual tolerance.
#[derive(Clone, Debug)]
pub struct PrecisionContext {
    arith: Arith,
    tolerance: BigFloat,
}

impl PrecisionContext {
    /// `bits` of precision with tolerance `2^{−bits/2}`.
    pub fn new(bits: usize) -> Result<Self> {
        if bits < 64 {
            return domain(format!("precision of {bits} bits is below the minimum of 64"));
        }
        let arith = Arith { bits };
        let tolerance = arith.pow2(-((bits / 2) as i64));
        Ok(Self { arith, tolerance })
    }

    pub fn with_tolerance_exponent(mut self, e: i64) -> Self {
        self.tolerance = self.arith.pow2(-e);
        self
    }

    /// Precision from the environment override, else [`DEFAULT_BITS`].
    pub fn from_env() -> Result<Self> {
        match std::env::var(PRECISION_ENV) {
            Ok(v) => {
                let bits: usize = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("{PRECISION_ENV}={v:?} is not an integer")))?;
                Self::new(bits)
            }
            Err(_) => Self::new(DEFAULT_BITS),
        }
    }

    pub fn bits(&self) -> usize {
        self.arith.bits
    }

    pub fn arith(&self) -> Arith {
        self.arith
    }

    pub fn tolerance(&self) -> &BigFloat {
        &self.tolerance
    }

    pub fn within(&self, x: &BigFloat) -> bool {
        self.arith.real_le(x, &self.tolerance)
    }

    pub fn negligible(&self, z: &Complex) -> bool {
        self.within(&self.arith.abs(z))
    }
}

/// A point of `P^n`, scaled so its first coordinate of (near-)largest
/// modulus is `1`.
#[derive(Clone, Debug)]
pub struct ProjectivePoint {
    coords: Vec<Complex>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Complex>, prec: &PrecisionContext) -> Result<Self> {
        let a = prec.arith();
        let norms: Vec<BigFloat> = coords.iter().map(|c| a.norm_sqr(c)).collect();
        let max = norms
            .iter()
            .fold(a.real_int(0), |m, x| if a.real_le(&m, x) { x.clone() } else { m });
        if max.is_zero() {
            return domain("projective point with all coordinates zero");
        }
        let one = a.real_int(1);
        let floor = max.mul(
            &one.sub(prec.tolerance(), a.bits, astro_float::RoundingMode::ToEven),
            a.bits,
            astro_float::RoundingMode::ToEven,
        );
        let pivot = norms
            .iter()
            .position(|x| a.real_le(&floor, x))
            .expect("the maximum qualifies");
        let p = coords[pivot].clone();
        let coords = coords
            .iter()
            .enumerate()
            .map(|(i, c)| if i == pivot { a.one() } else { a.div(c, &p) })
            .collect();
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Complex] {
        &self.coords
    }

    pub fn approx_eq(&self, other: &ProjectivePoint, prec: &PrecisionContext) -> bool {
        let a = prec.arith();
        self.coords.len() == other.coords.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(x, y)| prec.negligible(&a.sub(x, y)))
    }

    pub fn render(&self, digits: usize) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| c.render(digits)).collect();
        format!("[{}]", parts.join(" : "))
    }
}

/// The curve `x₁²+x₂²+x₃² = 0`, `λ_j x₁² + x₂² + x_{j+3}² = 0`.
#[derive(Clone, Debug)]
pub struct CurveSystem {
    params: ParameterTuple,
    lambdas: Vec<Complex>,
}

impl CurveSystem {
    pub fn new(params: &ParameterTuple, prec: &PrecisionContext) -> Self {
        let a = prec.arith();
        Self {
            params: params.clone(),
            lambdas: params.lambdas().iter().map(|q| a.from_rational(q)).collect(),
        }
    }

    pub fn params(&self) -> &ParameterTuple {
        &self.params
    }

    pub fn n(&self) -> usize {
        self.params.n()
    }

    /// Values of the `n − 1` quadrics at `pt`.
    pub fn evaluate(&self, pt: &ProjectivePoint, prec: &PrecisionContext) -> Result<Vec<Complex>> {
        let a = prec.arith();
        let x = pt.coords();
        if x.len() != self.n() + 1 {
            return domain(format!(
                "point has {} coordinates, type {} needs {}",
                x.len(),
                self.n(),
                self.n() + 1
            ));
        }
        let sq: Vec<Complex> = x.iter().map(|c| a.mul(c, c)).collect();
        let mut out = vec![a.add(&a.add(&sq[0], &sq[1]), &sq[2])];
        for (j, l) in self.lambdas.iter().enumerate() {
            out.push(a.add(&a.add(&a.mul(l, &sq[0]), &sq[1]), &sq[j + 3]));
        }
        Ok(out)
    }
}

/// Largest modulus of the quadric values at the normalized point.
pub fn residual(sys: &CurveSystem, pt: &ProjectivePoint, prec: &PrecisionContext) -> Result<BigFloat> {
    let a = prec.arith();
    Ok(sys
        .evaluate(pt, prec)?
        .iter()
        .map(|v| a.abs(v))
        .fold(a.real_int(0), |m, x| if a.real_le(&m, &x) { x } else { m }))
}

/// `a_j` negates `x_j`.
pub fn apply_automorphism(
    pt: &ProjectivePoint,
    j: usize,
    prec: &PrecisionContext,
) -> Result<ProjectivePoint> {
    if j == 0 || j > pt.coords.len() {
        return domain(format!("automorphism index {j} outside 1..={}", pt.coords.len()));
    }
    let mut coords = pt.coords.clone();
    coords[j - 1] = coords[j - 1].neg();
    ProjectivePoint::new(coords, prec)
}

/// A point of the Riemann sphere.
#[derive(Clone, Debug)]
pub enum SpherePoint {
    Finite(Complex),
    Infinity,
}

impl SpherePoint {
    pub fn from_extended(v: &ExtendedRational, prec: &PrecisionContext) -> Self {
        match v {
            ExtendedRational::Infinity => Self::Infinity,
            ExtendedRational::Finite(q) => Self::Finite(prec.arith().from_rational(q)),
        }
    }

    pub fn approx_eq(&self, other: &SpherePoint, prec: &PrecisionContext) -> bool {
        match (self, other) {
            (Self::Infinity, Self::Infinity) => true,
            (Self::Finite(x), Self::Finite(y)) => prec.negligible(&prec.arith().sub(x, y)),
            _ => false,
        }
    }

    pub fn render(&self, digits: usize) -> String {
        match self {
            Self::Infinity => "inf".into(),
            Self::Finite(z) => z.render(digits),
        }
    }
}

/// `π[x] = −(x₂/x₁)²`, and `∞` where `x₁` vanishes.
pub fn project(pt: &ProjectivePoint, prec: &PrecisionContext) -> SpherePoint {
    let a = prec.arith();
    let x = pt.coords();
    if prec.negligible(&x[0]) {
        return SpherePoint::Infinity;
    }
    let r = a.div(&x[1], &x[0]);
    SpherePoint::Finite(a.mul(&r, &r).neg())
}

/// Every point over `z`, by explicit sign enumeration of the solved
/// coordinates; coordinates that vanish get a single sign.
pub fn sample_fiber(
    sys: &CurveSystem,
    z: &SpherePoint,
    prec: &PrecisionContext,
) -> Result<Vec<ProjectivePoint>> {
    let a = prec.arith();
    let n = sys.n();
    let (first, rest): (Vec<Complex>, Vec<Complex>) = match z {
        SpherePoint::Infinity => (vec![a.zero(), a.one()], vec![a.i(); n - 1]),
        SpherePoint::Finite(z) => {
            let mut squares = vec![z.neg(), a.sub(z, &a.one())];
            squares.extend(sys.lambdas.iter().map(|l| a.sub(z, l)));
            (vec![a.one()], squares.iter().map(|s| a.sqrt(s)).collect())
        }
    };
    let free: Vec<usize> = (0..rest.len()).filter(|&i| !prec.negligible(&rest[i])).collect();
    let mut out = Vec::with_capacity(1 << free.len());
    for signs in 0u64..(1 << free.len()) {
        let mut coords = first.clone();
        for (i, c) in rest.iter().enumerate() {
            let coord = match free.iter().position(|&f| f == i) {
                None => a.zero(),
                Some(k) if signs >> k & 1 == 1 => c.neg(),
                Some(_) => c.clone(),
            };
            coords.push(coord);
        }
        let pt = ProjectivePoint::new(coords, prec)?;
        let r = residual(sys, &pt, prec)?;
        if !prec.within(&r) {
            return Err(Error::Precision {
                bits: prec.bits(),
                residual: render_real(&r, 6),
            });
        }
        out.push(pt);
    }
    Ok(out)
}

/// The orbit of `pt` under the sign action, up to normalization.
pub fn h_orbit(pt: &ProjectivePoint, prec: &PrecisionContext) -> Result<Vec<ProjectivePoint>> {
    let mut orbit = vec![pt.clone()];
    let mut i = 0;
    while i < orbit.len() {
        for j in 1..=pt.coords.len() {
            let q = apply_automorphism(&orbit[i], j, prec)?;
            if !orbit.iter().any(|o| o.approx_eq(&q, prec)) {
                orbit.push(q);
            }
        }
        i += 1;
    }
    Ok(orbit)
}

/// Genus from a degree-`2ⁿ` cover of the sphere and the fiber sizes over
/// its branch values.
pub fn riemann_hurwitz_genus(n: usize, branch_fiber_sizes: &[usize]) -> i64 {
    let deg = 1i64 << n;
    let ramification: i64 = branch_fiber_sizes.iter().map(|&f| deg - f as i64).sum();
    (ramification - 2 * deg) / 2 + 1
}

/// `λ`-value that the fixed locus of `a_j` projects to.
pub fn fixed_locus_value(params: &ParameterTuple, j: usize) -> Result<ExtendedRational> {
    params.branch_set().value(j).cloned()
}

pub fn rational_point(q: &Rational, prec: &PrecisionContext) -> SpherePoint {
    SpherePoint::Finite(prec.arith().from_rational(q))
}
