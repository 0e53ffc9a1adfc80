//! The symmetric-group action on normalized parameter tuples.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::equations::BranchSet;
use crate::error::{domain, Error, Result};
use crate::rational::{int, parse_rational_list, ratio, Rational};

/// Default orbit size cap, `8!`.
pub const DEFAULT_ORBIT_CAP: usize = 40_320;

/// `(λ₁, …, λ_{n−2})` in `V_n`: entries avoid `0, 1` and are pairwise distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParameterTuple {
    lambdas: Vec<Rational>,
}

impl ParameterTuple {
    pub fn new(lambdas: Vec<Rational>) -> Result<Self> {
        BranchSet::new(&lambdas)?;
        Ok(Self { lambdas })
    }

    /// Parse `"2,3"` and check it has the `n − 2` entries of type `n`.
    pub fn parse_for(n: usize, text: &str) -> Result<Self> {
        let t: Self = text.parse()?;
        if t.n() != n {
            return domain(format!(
                "type n = {n} needs {} parameters, got {}",
                n.saturating_sub(2),
                t.lambdas.len()
            ));
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.lambdas.len() + 2
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    pub fn branch_set(&self) -> BranchSet {
        BranchSet::new(&self.lambdas).expect("validated on construction")
    }

    /// A tuple of small random rationals in `V_n`.
    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Result<Self> {
        if n < 4 {
            return domain(format!("type n = {n} must be at least 4"));
        }
        let mut lambdas: Vec<Rational> = Vec::with_capacity(n - 2);
        while lambdas.len() < n - 2 {
            let q = ratio(rng.gen_range(-40..=40), rng.gen_range(1..=9));
            if !q.is_zero() && !q.is_one() && !lambdas.contains(&q) {
                lambdas.push(q);
            }
        }
        Self::new(lambdas)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.lambdas.iter().map(|q| q.to_string()).collect()
    }
}

impl FromStr for ParameterTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_rational_list(s)?)
    }
}

impl fmt::Display for ParameterTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_strings().join(","))
    }
}

/// Generators of the action. `R` fixes the last branch point and together
/// with `B` generates its stabilizer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    T,
    B,
    S,
    C,
    R,
}

impl Generator {
    pub fn label(&self) -> char {
        match self {
            Self::T => 't',
            Self::B => 'b',
            Self::S => 's',
            Self::C => 'c',
            Self::R => 'r',
        }
    }

    pub fn from_label(c: char) -> Result<Self> {
        Ok(match c {
            't' => Self::T,
            'b' => Self::B,
            's' => Self::S,
            'c' => Self::C,
            'r' => Self::R,
            _ => return Err(Error::Parse(format!("unknown generator '{c}'"))),
        })
    }

    /// `"sbc"` → `[S, B, C]`, duplicates dropped.
    pub fn parse_set(s: &str) -> Result<Vec<Self>> {
        let mut out = Vec::new();
        for c in s.trim().chars() {
            let g = Self::from_label(c)?;
            if !out.contains(&g) {
                out.push(g);
            }
        }
        if out.is_empty() {
            return Err(Error::Parse("empty generator set".into()));
        }
        Ok(out)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

pub fn word_string(word: &[Generator]) -> String {
    word.iter().map(|g| g.label()).collect()
}

/// `z ↦ L/(L − z)`, defined away from `z = L`.
fn pivot_map(l: &Rational, z: &Rational) -> Rational {
    l / (l - z)
}

pub fn apply_generator(g: Generator, p: &ParameterTuple) -> ParameterTuple {
    let lam = &p.lambdas;
    let m = lam.len();
    let one = int(1);
    let lambdas: Vec<Rational> = match g {
        Generator::B => lam.iter().map(|x| x.recip()).collect(),
        Generator::C => {
            let mut v = lam.clone();
            v.swap(m - 2, m - 1);
            v
        }
        Generator::T => {
            let l = &lam[m - 1];
            std::iter::once(&one)
                .chain(&lam[..m - 1])
                .map(|z| pivot_map(l, z))
                .collect()
        }
        Generator::S if m == 2 => lam.iter().map(|z| pivot_map(&one, z)).collect(),
        Generator::S => {
            let l = &lam[m - 3];
            std::iter::once(&one)
                .chain(&lam[..m - 3])
                .chain(&lam[m - 2..])
                .map(|z| pivot_map(l, z))
                .collect()
        }
        Generator::R => {
            let l = &lam[m - 2];
            std::iter::once(&one)
                .chain(&lam[..m - 2])
                .chain(&lam[m - 1..])
                .map(|z| pivot_map(l, z))
                .collect()
        }
    };
    ParameterTuple { lambdas }
}

pub fn apply_word(word: &[Generator], p: &ParameterTuple) -> ParameterTuple {
    word.iter().fold(p.clone(), |acc, &g| apply_generator(g, &acc))
}

/// Breadth-first closure of a seed under a generator set.
#[derive(Clone, Debug)]
pub struct Orbit {
    seed: ParameterTuple,
    generators: Vec<Generator>,
    /// member → (predecessor, generator applied to it); the seed maps to `None`.
    tree: BTreeMap<ParameterTuple, Option<(ParameterTuple, Generator)>>,
}

impl Orbit {
    pub fn seed(&self) -> &ParameterTuple {
        &self.seed
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn size(&self) -> usize {
        self.tree.len()
    }

    /// Members in canonical order.
    pub fn members(&self) -> impl Iterator<Item = &ParameterTuple> {
        self.tree.keys()
    }

    pub fn contains(&self, p: &ParameterTuple) -> bool {
        self.tree.contains_key(p)
    }

    /// Generators that carry the seed to `target`, in application order.
    pub fn word_to(&self, target: &ParameterTuple) -> Option<Vec<Generator>> {
        let mut word = Vec::new();
        let mut cur = target;
        loop {
            match self.tree.get(cur)? {
                None => break,
                Some((prev, g)) => {
                    word.push(*g);
                    cur = prev;
                }
            }
        }
        word.reverse();
        Some(word)
    }

    pub fn report(&self) -> OrbitReport {
        OrbitReport {
            seed: self.seed.to_strings(),
            generators: self.generators.iter().map(|g| g.label().to_string()).collect(),
            size: self.size(),
            members: self.members().map(|m| m.to_strings()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub seed: Vec<String>,
    pub generators: Vec<String>,
    pub size: usize,
    pub members: Vec<Vec<String>>,
}

fn check_generators(n: usize, gens: &[Generator]) -> Result<()> {
    if gens.is_empty() {
        return domain("empty generator set");
    }
    if n < 4 {
        return domain(format!("type n = {n} must be at least 4"));
    }
    Ok(())
}

pub fn orbit(p: &ParameterTuple, gens: &[Generator], cap: usize) -> Result<Orbit> {
    check_generators(p.n(), gens)?;
    let mut tree = BTreeMap::new();
    tree.insert(p.clone(), None);
    let mut queue = VecDeque::from([p.clone()]);
    while let Some(cur) = queue.pop_front() {
        for &g in gens {
            let next = apply_generator(g, &cur);
            if tree.contains_key(&next) {
                continue;
            }
            if tree.len() >= cap {
                return Err(Error::Capacity {
                    what: format!("orbit of ({p}) under <{}>", word_string(gens)),
                    cap,
                });
            }
            tree.insert(next.clone(), Some((cur.clone(), g)));
            queue.push_back(next);
        }
    }
    Ok(Orbit {
        seed: p.clone(),
        generators: gens.to_vec(),
        tree,
    })
}

/// `Some(word)` with `word(p1) = p2` iff the tuples lie in one `⟨t, b⟩`-orbit.
pub fn are_equivalent(p1: &ParameterTuple, p2: &ParameterTuple) -> Result<Option<Vec<Generator>>> {
    if p1.n() != p2.n() {
        return domain(format!(
            "tuples of different types {} and {}",
            p1.n(),
            p2.n()
        ));
    }
    Ok(orbit(p1, &[Generator::T, Generator::B], DEFAULT_ORBIT_CAP)?.word_to(p2))
}

/// Sizes of the `gens`-orbits partitioning an orbit of a larger group, in
/// order of their least member.
pub fn partition(whole: &Orbit, gens: &[Generator]) -> Result<Vec<usize>> {
    check_generators(whole.seed.n(), gens)?;
    let mut seen: BTreeMap<&ParameterTuple, ()> = BTreeMap::new();
    let mut sizes = Vec::new();
    for m in whole.members() {
        if seen.contains_key(m) {
            continue;
        }
        let sub = orbit(m, gens, whole.size())?;
        for x in sub.members() {
            match whole.tree.get_key_value(x) {
                Some((k, _)) => {
                    seen.insert(k, ());
                }
                None => return domain("generator set leaves the enclosing orbit"),
            }
        }
        sizes.push(sub.size());
    }
    Ok(sizes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuborbitReport {
    pub orbit_size: usize,
    pub suborbit_sizes: Vec<usize>,
}

impl SuborbitReport {
    pub fn count(&self) -> usize {
        self.suborbit_sizes.len()
    }
}

/// How the `⟨t, b⟩`-orbit of `p` splits under `⟨s, b, c⟩`.
pub fn suborbit_count(p: &ParameterTuple) -> Result<SuborbitReport> {
    let whole = orbit(p, &[Generator::T, Generator::B], DEFAULT_ORBIT_CAP)?;
    Ok(SuborbitReport {
        orbit_size: whole.size(),
        suborbit_sizes: partition(&whole, &[Generator::S, Generator::B, Generator::C])?,
    })
}

/// How the `⟨t, b⟩`-orbit of `p` splits under the stabilizer `⟨r, b⟩` of
/// one branch point.
pub fn single_point_classes(p: &ParameterTuple) -> Result<SuborbitReport> {
    let whole = orbit(p, &[Generator::T, Generator::B], DEFAULT_ORBIT_CAP)?;
    Ok(SuborbitReport {
        orbit_size: whole.size(),
        suborbit_sizes: partition(&whole, &[Generator::R, Generator::B])?,
    })
}

pub fn factorial(k: usize) -> usize {
    (1..=k).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobius::MobiusMap;
    use crate::rational::ExtendedRational;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn tup(s: &str) -> ParameterTuple {
        s.parse().unwrap()
    }

    use Generator::*;

    #[test]
    fn generator_examples() {
        let p = tup("2,3");
        assert_eq!(apply_generator(T, &p), tup("3/2,3"));
        assert_eq!(apply_generator(B, &p), tup("1/2,1/3"));
        assert_eq!(apply_generator(C, &p), tup("3,2"));
        assert_eq!(apply_generator(S, &p), tup("-1,-1/2"));
    }

    #[test]
    fn tuple_validation() {
        assert!("2,2".parse::<ParameterTuple>().is_err());
        assert!("0,2".parse::<ParameterTuple>().is_err());
        assert!("2".parse::<ParameterTuple>().is_err());
        assert!(ParameterTuple::parse_for(5, "2,3").is_err());
        assert_eq!(ParameterTuple::parse_for(4, "5/2, 7/3").unwrap().to_string(), "5/2,7/3");
    }

    /// Independent oracle: a generator acts as a Möbius map on the branch
    /// list, and the image tuple is the renormalized branch list read off
    /// in the generator's relabeled order.
    fn via_branch_points(g: Generator, p: &ParameterTuple) -> ParameterTuple {
        let vals = p.branch_set().values().to_vec();
        let m = vals.len();
        // position whose value goes to ∞, and the order in which old
        // positions supply the new list after ∞, 0, 1
        let (pole, order): (usize, Vec<usize>) = match g {
            T => (m - 1, (2..m - 1).collect()),
            S if m == 5 => (2, vec![3, 4]),
            S => (m - 3, [2].into_iter().chain(3..m - 3).chain(m - 2..m).collect()),
            R => (m - 2, [2].into_iter().chain(3..m - 2).chain([m - 1]).collect()),
            _ => unreachable!(),
        };
        let l = vals[pole].as_finite().unwrap().clone();
        let map = MobiusMap::new(int(0), l.clone(), int(-1), l).unwrap();
        assert_eq!(map.apply(&ExtendedRational::Infinity), ExtendedRational::int(0));
        assert_eq!(map.apply(&ExtendedRational::int(0)), ExtendedRational::int(1));
        let lambdas: Vec<_> = order[1..]
            .iter()
            .map(|&i| map.apply(&vals[i]).as_finite().unwrap().clone())
            .collect();
        let first = map.apply(&vals[order[0]]).as_finite().unwrap().clone();
        ParameterTuple::new([vec![first], lambdas].concat()).unwrap()
    }

    #[test]
    fn formulas_agree_with_branch_point_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 4..=7 {
            for _ in 0..20 {
                let p = ParameterTuple::random(n, &mut rng).unwrap();
                for g in [T, S, R] {
                    assert_eq!(apply_generator(g, &p), via_branch_points(g, &p), "{g} on {p}");
                }
            }
        }
    }

    #[test]
    fn orbit_examples() {
        let p = tup("2,3");
        let o = orbit(&p, &[T, B], DEFAULT_ORBIT_CAP).unwrap();
        assert!(o.contains(&tup("1/2,1/3")) && o.contains(&tup("3/2,3")));
        // z ↦ 3 − z preserves {∞, 0, 1, 2, 3}
        assert_eq!(o.size(), 60);
        assert_eq!(orbit(&tup("3,7"), &[T, B], DEFAULT_ORBIT_CAP).unwrap().size(), 120);
        let o = orbit(&p, &[B], DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(o.members().cloned().collect::<Vec<_>>(), vec![tup("1/2,1/3"), tup("2,3")]);
        let o = orbit(&tup("-1,2"), &[T, B], DEFAULT_ORBIT_CAP).unwrap();
        assert!(o.size() < 120 && 120 % o.size() == 0);
        assert!(matches!(orbit(&p, &[T, B], 50), Err(Error::Capacity { .. })));
    }

    #[test]
    fn equivalence_examples() {
        let w = are_equivalent(&tup("2,3"), &tup("3/2,3")).unwrap().unwrap();
        assert_eq!(apply_word(&w, &tup("2,3")), tup("3/2,3"));
        assert_eq!(are_equivalent(&tup("2,3"), &tup("2,3")).unwrap(), Some(vec![]));
        assert_eq!(are_equivalent(&tup("2,3"), &tup("7,11")).unwrap(), None);
        assert!(are_equivalent(&tup("2,3"), &tup("2,3,5")).is_err());
    }

    #[test]
    fn suborbit_examples() {
        let r = suborbit_count(&tup("3,7")).unwrap();
        assert_eq!((r.orbit_size, r.count()), (120, 10));
        assert!(r.suborbit_sizes.iter().all(|&s| s == 12));
        let r = single_point_classes(&tup("3,7")).unwrap();
        assert_eq!(r.count(), 5);
        let r = suborbit_count(&tup("2,3")).unwrap();
        assert_eq!((r.orbit_size, r.count()), (60, 6));
        let r = suborbit_count(&tup("3,7,11")).unwrap();
        assert_eq!((r.orbit_size, r.count()), (720, 15));
    }

    #[test]
    fn generator_set_parsing() {
        assert_eq!(Generator::parse_set("sbc").unwrap(), vec![S, B, C]);
        assert_eq!(Generator::parse_set("tbt").unwrap(), vec![T, B]);
        assert!(Generator::parse_set("x").is_err());
        assert!(Generator::parse_set("").is_err());
    }

    fn arb_tuple(n: usize) -> impl Strategy<Value = ParameterTuple> {
        proptest::collection::vec((-30i64..30, 1i64..8), n - 2)
            .prop_filter_map("not in V_n", |v| {
                ParameterTuple::new(v.into_iter().map(|(a, b)| ratio(a, b)).collect()).ok()
            })
    }

    proptest! {
        #[test]
        fn relations_hold(n in 4usize..=6, seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = ParameterTuple::random(n, &mut rng).unwrap();
            prop_assert_eq!(apply_word(&[B, B], &p), p.clone());
            prop_assert_eq!(apply_word(&[C, C], &p), p.clone());
            prop_assert_eq!(apply_word(&vec![T; n + 1], &p), p.clone());
            prop_assert_eq!(apply_word(&[S, C], &p), apply_word(&[C, S], &p));
            prop_assert_eq!(apply_word(&[B, C], &p), apply_word(&[C, B], &p));
        }

        #[test]
        fn images_stay_in_v_n(p in arb_tuple(5)) {
            for g in [T, B, S, C, R] {
                let q = apply_generator(g, &p);
                prop_assert!(ParameterTuple::new(q.lambdas().to_vec()).is_ok());
            }
        }

        #[test]
        fn display_parse_roundtrip(p in arb_tuple(6)) {
            prop_assert_eq!(p.to_string().parse::<ParameterTuple>().unwrap(), p);
        }
    }
}
