use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

type Monomial = Vec<u32>;
type NamedMonomial = Vec<(String, u32)>;

#[derive(Debug, Clone, PartialEq)]
enum Rule {
    /// `gen^power = 0`
    Nilpotent { gen: usize, power: u32 },
    /// `lhs = coeff * rhs`
    Rewrite { lhs: Monomial, coeff: BigRational, rhs: Monomial },
}

/// Description of a graded ring `Q[gens] / (relations)` with a top-degree evaluation.
///
/// Relations are either nilpotency rules `g^p = 0` or degree-preserving monomial
/// rewrites `a = c * b`. Anything above `top_degree` vanishes. The evaluation
/// assigns a rational number to each surviving monomial of top degree; it plays
/// the role of integration over the fundamental class.
#[derive(Debug, Clone, Default)]
pub struct GradedRingSpec {
    generators: Vec<(String, u32)>,
    nilpotent: Vec<(String, u32)>,
    rewrites: Vec<(NamedMonomial, BigRational, NamedMonomial)>,
    top_degree: u32,
    evaluation: Vec<(NamedMonomial, BigRational)>,
}

impl GradedRingSpec {
    pub fn new(generators: &[(&str, u32)]) -> Self {
        Self {
            generators: generators.iter().map(|&(n, d)| (n.to_string(), d)).collect(),
            ..Self::default()
        }
    }

    pub fn nilpotent(mut self, gen: &str, power: u32) -> Self {
        self.nilpotent.push((gen.to_string(), power));
        self
    }

    pub fn rewrite(mut self, lhs: &[(&str, u32)], coeff: BigRational, rhs: &[(&str, u32)]) -> Self {
        self.rewrites.push((owned(lhs), coeff, owned(rhs)));
        self
    }

    pub fn top_degree(mut self, degree: u32) -> Self {
        self.top_degree = degree;
        self
    }

    pub fn evaluate(mut self, monomial: &[(&str, u32)], value: BigRational) -> Self {
        self.evaluation.push((owned(monomial), value));
        self
    }

    /// Validates the specification and precomputes normal forms of every monomial up to top degree.
    pub fn build(self) -> Result<Arc<GradedRing>> {
        GradedRing::from_spec(self).map(Arc::new)
    }
}

fn owned(m: &[(&str, u32)]) -> NamedMonomial {
    m.iter().map(|&(n, e)| (n.to_string(), e)).collect()
}

/// A validated [`GradedRingSpec`] with its normal-form table.
#[derive(Debug)]
pub struct GradedRing {
    names: Vec<String>,
    degrees: Vec<u32>,
    rules: Vec<Rule>,
    top_degree: u32,
    normal_forms: HashMap<Monomial, Option<(BigRational, Monomial)>>,
    evaluation: HashMap<Monomial, BigRational>,
}

const MAX_REWRITE_STEPS: usize = 10_000;

impl GradedRing {
    fn from_spec(spec: GradedRingSpec) -> Result<Self> {
        let names: Vec<String> = spec.generators.iter().map(|(n, _)| n.clone()).collect();
        let degrees: Vec<u32> = spec.generators.iter().map(|&(_, d)| d).collect();
        if let Some((n, _)) = spec.generators.iter().find(|(_, d)| *d == 0) {
            return Err(Error::RingSpec(format!("generator {n} has degree 0")));
        }
        if !names.iter().all_unique() {
            return Err(Error::RingSpec("duplicate generator names".into()));
        }
        let index = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| Error::RingSpec(format!("unknown generator {name}")))
        };
        let monomial = |m: &[(String, u32)]| -> Result<Monomial> {
            let mut e = vec![0; names.len()];
            for (n, p) in m {
                e[index(n)?] += p;
            }
            Ok(e)
        };
        let weight = |e: &Monomial| -> u32 { e.iter().zip(&degrees).map(|(a, b)| a * b).sum() };

        let mut rules = Vec::new();
        for (g, p) in &spec.nilpotent {
            rules.push(Rule::Nilpotent { gen: index(g)?, power: *p });
        }
        for (lhs, coeff, rhs) in &spec.rewrites {
            let (lhs, rhs) = (monomial(lhs)?, monomial(rhs)?);
            if weight(&lhs) != weight(&rhs) {
                return Err(Error::RingSpec(format!(
                    "rewrite changes degree ({} -> {})",
                    weight(&lhs),
                    weight(&rhs)
                )));
            }
            if lhs.iter().all(|&e| e == 0) {
                return Err(Error::RingSpec("rewrite with constant left side".into()));
            }
            rules.push(Rule::Rewrite { lhs, coeff: coeff.clone(), rhs });
        }

        let mut ring = Self {
            names: names.clone(),
            degrees: degrees.clone(),
            rules,
            top_degree: spec.top_degree,
            normal_forms: HashMap::new(),
            evaluation: HashMap::new(),
        };

        let basis = ring.all_monomials();
        let default_order: Vec<usize> = (0..ring.rules.len()).collect();
        for m in &basis {
            let nf = ring.normalize_with_order(m.clone(), &default_order)?;
            ring.normal_forms.insert(m.clone(), nf);
        }
        ring.check_confluence(&basis)?;

        for (m, v) in &spec.evaluation {
            let e = monomial(m)?;
            if weight(&e) != ring.top_degree {
                return Err(Error::RingSpec(format!("evaluation given off top degree: {}", ring.show(&e))));
            }
            match ring.normal_forms.get(&e) {
                Some(Some((c, nf))) if c.is_one() && *nf == e => {
                    ring.evaluation.insert(e, v.clone());
                }
                _ => {
                    return Err(Error::RingSpec(format!(
                        "evaluation given on a monomial that is not a normal form: {}",
                        ring.show(&e)
                    )))
                }
            }
        }
        let surviving_top = basis
            .iter()
            .filter(|m| weight(m) == ring.top_degree)
            .filter(|m| matches!(ring.normal_forms.get(*m), Some(Some((c, nf))) if c.is_one() && nf == *m));
        for m in surviving_top {
            if !ring.evaluation.contains_key(m) {
                return Err(Error::RingSpec(format!("no evaluation for top-degree monomial {}", ring.show(m))));
            }
        }
        Ok(ring)
    }

    fn weight(&self, e: &[u32]) -> u32 {
        e.iter().zip(&self.degrees).map(|(a, b)| a * b).sum()
    }

    /// Every exponent vector of weighted degree at most `top_degree`.
    fn all_monomials(&self) -> Vec<Monomial> {
        fn rec(degs: &[u32], budget: u32, prefix: &mut Monomial, out: &mut Vec<Monomial>) {
            match degs.split_first() {
                None => out.push(prefix.clone()),
                Some((&d, rest)) => {
                    for e in 0..=budget / d {
                        prefix.push(e);
                        rec(rest, budget - e * d, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        rec(&self.degrees, self.top_degree, &mut Vec::new(), &mut out);
        out
    }

    fn normalize_with_order(&self, mut m: Monomial, order: &[usize]) -> Result<Option<(BigRational, Monomial)>> {
        let mut coeff = BigRational::one();
        for _ in 0..MAX_REWRITE_STEPS {
            if self.weight(&m) > self.top_degree {
                return Ok(None);
            }
            let applied = order.iter().find_map(|&i| match &self.rules[i] {
                Rule::Nilpotent { gen, power } => (m[*gen] >= *power).then_some(None),
                Rule::Rewrite { lhs, coeff, rhs } => divides(lhs, &m).then_some(Some((coeff, lhs, rhs))),
            });
            match applied {
                None => return Ok(Some((coeff, m))),
                Some(None) => return Ok(None),
                Some(Some((c, lhs, rhs))) => {
                    if c.is_zero() {
                        return Ok(None);
                    }
                    coeff *= c;
                    for ((x, l), r) in m.iter_mut().zip(lhs).zip(rhs) {
                        *x = *x - l + r;
                    }
                }
            }
        }
        Err(Error::RingSpec(format!("rewriting does not terminate from {}", self.show(&m))))
    }

    /// Normalizes every basis monomial under several rule orders and requires identical results.
    fn check_confluence(&self, basis: &[Monomial]) -> Result<()> {
        let n = self.rules.len();
        let orders: Vec<Vec<usize>> = if n <= 5 {
            (0..n).permutations(n).collect()
        } else {
            (0..n).map(|s| (0..n).map(|i| (i + s) % n).collect()).chain([(0..n).rev().collect()]).collect()
        };
        for m in basis {
            let reference = &self.normal_forms[m];
            for order in &orders {
                if self.normalize_with_order(m.clone(), order)? != *reference {
                    return Err(Error::RingSpec(format!(
                        "relations are not confluent at {}",
                        self.show(m)
                    )));
                }
            }
        }
        Ok(())
    }

    fn normal_form(&self, m: &Monomial) -> Option<(BigRational, Monomial)> {
        if self.weight(m) > self.top_degree {
            return None;
        }
        self.normal_forms[m].clone()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    fn show(&self, e: &[u32]) -> String {
        let parts: Vec<String> = e
            .iter()
            .zip(&self.names)
            .filter(|(&p, _)| p > 0)
            .map(|(&p, n)| if p == 1 { n.clone() } else { format!("{n}^{p}") })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn zero(self: &Arc<Self>) -> RingElement {
        RingElement { ring: Arc::clone(self), terms: BTreeMap::new() }
    }

    pub fn one(self: &Arc<Self>) -> RingElement {
        self.scalar(BigRational::one())
    }

    pub fn scalar(self: &Arc<Self>, c: BigRational) -> RingElement {
        let mut e = self.zero();
        e.add_monomial(vec![0; self.names.len()], c);
        e
    }

    pub fn gen(self: &Arc<Self>, name: &str) -> RingElement {
        let i = self.names.iter().position(|n| n == name).unwrap_or_else(|| panic!("unknown generator {name}"));
        let mut m = vec![0; self.names.len()];
        m[i] = 1;
        let mut e = self.zero();
        e.add_monomial(m, BigRational::one());
        e
    }
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// An element of a [`GradedRing`], kept in normal form.
#[derive(Clone)]
pub struct RingElement {
    ring: Arc<GradedRing>,
    terms: BTreeMap<Monomial, BigRational>,
}

impl RingElement {
    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    fn add_monomial(&mut self, m: Monomial, c: BigRational) {
        let Some((f, nf)) = self.ring.normal_form(&m) else { return };
        let c = c * f;
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(nf).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            let key = self.terms.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = self.ring.zero();
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies the evaluation functional to the top-degree part.
    pub fn evaluate(&self) -> BigRational {
        let top = self.ring.top_degree;
        self.terms
            .iter()
            .filter(|(m, _)| self.ring.weight(m) == top)
            .map(|(m, c)| c * &self.ring.evaluation[m])
            .sum()
    }

    /// The homogeneous part of degree `deg`.
    pub fn part(&self, deg: u32) -> Self {
        let mut out = self.ring.zero();
        out.terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ring.weight(m) == deg)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        out
    }

    fn same_ring(&self, other: &Self) {
        assert!(Arc::ptr_eq(&self.ring, &other.ring), "elements of different rings");
    }
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({self})")
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let sep = match (i, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            write!(f, "{sep}{} {}", c.abs(), self.ring.show(m))?;
        }
        Ok(())
    }
}

impl Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        self.same_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_monomial(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        self + &(-rhs)
    }
}

impl Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        self.scale(&-BigRational::one())
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        self.same_ring(rhs);
        let mut out = self.ring.zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_monomial(m, ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{int, rational};

    fn theta_ring(g: u32) -> Arc<GradedRing> {
        let fact: i64 = (1..=g as i64).product();
        GradedRingSpec::new(&[("theta", 1)])
            .nilpotent("theta", g + 1)
            .top_degree(g)
            .evaluate(&[("theta", g)], int(fact))
            .build()
            .unwrap()
    }

    #[test]
    fn theta_ring_arithmetic() {
        let r = theta_ring(3);
        let t = r.gen("theta");
        assert!(t.pow(4).is_zero());
        assert_eq!(t.pow(3).evaluate(), int(6));
        assert_eq!((&t + &r.one()).pow(3).evaluate(), int(6));
        assert_eq!(t.pow(2).evaluate(), int(0));
    }

    #[test]
    fn rewrite_rule_applies() {
        // y^3 = 3 e y^2, e^2 = 0, top degree 3 with e y^2 -> 1/2
        let r = GradedRingSpec::new(&[("y", 1), ("e", 1)])
            .nilpotent("e", 2)
            .rewrite(&[("y", 3)], int(3), &[("e", 1), ("y", 2)])
            .top_degree(3)
            .evaluate(&[("e", 1), ("y", 2)], rational(1, 2))
            .build()
            .unwrap();
        let y = r.gen("y");
        assert_eq!(y.pow(3).evaluate(), rational(3, 2));
        assert!(y.pow(4).is_zero());
        assert_eq!((&y * &r.gen("e")).pow(2).to_string(), "0");
    }

    #[test]
    fn missing_evaluation_rejected() {
        let err = GradedRingSpec::new(&[("a", 1), ("b", 1)])
            .nilpotent("a", 2)
            .nilpotent("b", 2)
            .top_degree(2)
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::RingSpec(msg) if msg.contains("a b")));
    }

    #[test]
    fn bad_specs_rejected() {
        assert!(GradedRingSpec::new(&[("a", 1)]).nilpotent("z", 2).build().is_err());
        let cycle = GradedRingSpec::new(&[("a", 1), ("b", 1)])
            .rewrite(&[("a", 1)], int(1), &[("b", 1)])
            .rewrite(&[("b", 1)], int(1), &[("a", 1)])
            .top_degree(1)
            .build();
        assert!(matches!(cycle, Err(Error::RingSpec(msg)) if msg.contains("terminate")));
        let degree_change = GradedRingSpec::new(&[("a", 1), ("b", 2)])
            .rewrite(&[("a", 1)], int(1), &[("b", 1)])
            .build();
        assert!(degree_change.is_err());
        let off_top = GradedRingSpec::new(&[("a", 1)])
            .nilpotent("a", 2)
            .top_degree(1)
            .evaluate(&[], int(1))
            .build();
        assert!(off_top.is_err());
    }

    #[test]
    fn non_confluent_rejected() {
        // a^2 -> b^2 and a^2 -> 2 b^2 disagree depending on which fires first
        let err = GradedRingSpec::new(&[("a", 1), ("b", 1)])
            .rewrite(&[("a", 2)], int(1), &[("b", 2)])
            .rewrite(&[("a", 2)], int(2), &[("b", 2)])
            .nilpotent("b", 3)
            .top_degree(2)
            .evaluate(&[("a", 1), ("b", 1)], int(1))
            .evaluate(&[("b", 2)], int(1))
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::RingSpec(msg) if msg.contains("confluent")));
    }
}
