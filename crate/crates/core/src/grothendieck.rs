//! The Grothendieck ring of the module category at `q = 1`, realized as the
//! polynomial ring in segment variables: classes of standard modules map to
//! monomials, classes of simples to dual canonical elements, and a product
//! of simples is simple exactly when its expansion on the dual canonical
//! basis is a single term with coefficient one.
//!
//! Transition data come from the quantum engine in [`uqn`](crate::uqn),
//! specialized at `q = 1`; positivity of the quantum expansion coefficients
//! is what makes the specialized test equivalent to the quantum one, so any
//! negative coefficient found during re-expansion is a hard internal error.
//!
//! Weight classes whose support splits into blocks separated by gaps
//! factorize: letters at distance at least two commute, so transition data
//! is computed per block and multiplied. Comultiplication is checked on
//! segment generators against the coordinate-ring coproduct; the parabolic
//! embedding is oriented so the two sides agree literally.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::multisegments::{Multisegment, Segment};
use crate::uqn::{self, UqnError, Window};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GrothError {
    #[error("quantum engine failure: {0}")]
    Uqn(#[from] UqnError),
    #[error("negative coefficient {coeff} of {index} in a dual expansion; positivity violated")]
    NegativeCoefficient { index: String, coeff: String },
    #[error("re-expansion left a nonzero remainder; triangularity violated")]
    ExpansionStuck,
}

/// Polynomial in the commuting segment variables: a finite sum of
/// multisegment monomials with integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyA {
    terms: BTreeMap<Multisegment, BigInt>,
}

impl PolyA {
    pub fn zero() -> Self {
        PolyA::default()
    }

    pub fn one() -> Self {
        PolyA::monomial(Multisegment::empty(), BigInt::one())
    }

    pub fn monomial(m: Multisegment, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        PolyA { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multisegment, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Multisegment) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Multisegment, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, rhs: &PolyA) -> PolyA {
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub_scaled(&mut self, rhs: &PolyA, c: &BigInt) {
        for (m, x) in rhs.terms() {
            self.add_term(m.clone(), -(x * c));
        }
    }

    /// Product: monomials multiply by multiset union.
    pub fn mul(&self, rhs: &PolyA) -> PolyA {
        let mut out = PolyA::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in rhs.terms() {
                out.add_term(m1.union(m2), c1 * c2);
            }
        }
        out
    }

    /// The monomial minimal in the degeneration-refining order.
    fn min_monomial(&self) -> Option<&Multisegment> {
        self.terms.keys().min_by_key(|m| m.order_key())
    }
}

/// Expansion of an element on the dual canonical basis: coefficients per
/// multisegment, always nonnegative integers.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DualExpansion {
    terms: BTreeMap<Multisegment, BigInt>,
}

impl DualExpansion {
    pub fn terms(&self) -> impl Iterator<Item = (&Multisegment, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Multisegment) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Single term with coefficient one?
    pub fn is_single(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().next().unwrap().is_one()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| {
                    json!({"multisegment": m.to_string(), "coeff": c.to_string()})
                })
                .collect(),
        )
    }
}

/// The class of the standard module of a multisegment: the plain monomial.
pub fn phi_standard(m: &Multisegment) -> PolyA {
    PolyA::monomial(m.clone(), BigInt::one())
}

/// Transition data of one connected block, cached at base translation.
struct BlockClass {
    index: Vec<Multisegment>,
    k_at_one: Vec<Vec<BigInt>>,
    kinv_at_one: Vec<Vec<BigInt>>,
}

/// Engine holding per-block transition data at `q = 1`.
///
/// Construction of new blocks is the only mutation; all queries after that
/// are pure, so batch callers can keep one engine per worker.
#[derive(Default)]
pub struct DualBasisEngine {
    blocks: BTreeMap<Vec<u64>, BlockClass>,
}

/// Split a multisegment into its connected support blocks.
fn support_blocks(m: &Multisegment) -> Vec<Multisegment> {
    let dim = m.dim_vector();
    let mut out: Vec<(i64, i64, Multisegment)> = Vec::new(); // [lo, hi] blocks
    for (&p, _) in dim.iter() {
        match out.last_mut() {
            Some((_, hi, _)) if *hi + 1 == p => *hi = p,
            _ => out.push((p, p, Multisegment::empty())),
        }
    }
    for (seg, c) in m.iter() {
        let slot = out
            .iter_mut()
            .find(|(lo, hi, _)| *lo <= seg.start() && seg.end() <= *hi)
            .expect("segment lies in one block");
        slot.2.push(*seg, c);
    }
    out.into_iter().map(|(_, _, b)| b).collect()
}

impl DualBasisEngine {
    pub fn new() -> Self {
        DualBasisEngine::default()
    }

    /// Transition data of the connected block containing `block` (support
    /// must be gap-free). The stored index lives at window coordinates with
    /// support starting at 1; the returned shift maps the caller's block
    /// into those coordinates.
    fn block_class(&mut self, block: &Multisegment) -> Result<(&BlockClass, i64), GrothError> {
        let dim = block.dim_vector();
        let lo = *dim.keys().next().expect("nonempty block");
        let hi = *dim.keys().next_back().unwrap();
        let shift = 1 - lo;
        let key: Vec<u64> = (lo..=hi).map(|p| dim.get(&p).copied().unwrap_or(0)).collect();
        debug_assert!(key.iter().all(|&c| c > 0), "gap-free block");
        if !self.blocks.contains_key(&key) {
            let letters = key.len();
            let degree: u64 = key.iter().sum();
            let window = Window::new(letters + 1, degree.max(1) as usize)?;
            let k = uqn::canonical_k(&window, &key)?;
            let class = BlockClass {
                index: k.index().to_vec(),
                k_at_one: k.at_one(),
                kinv_at_one: k
                    .dual_coeffs()
                    .iter()
                    .map(|row| row.iter().map(|e| e.eval_one()).collect())
                    .collect(),
            };
            self.blocks.insert(key.clone(), class);
        }
        Ok((self.blocks.get(&key).unwrap(), shift))
    }

    /// The dual canonical element of a multisegment at `q = 1`, in the
    /// monomial basis: leading monomial the multisegment itself, lower
    /// terms along the degeneration order. Blocks multiply.
    pub fn dual_poly(&mut self, m: &Multisegment) -> Result<PolyA, GrothError> {
        let mut out = PolyA::one();
        for block in support_blocks(m) {
            let (class, shift) = self.block_class(&block)?;
            let windowed = block.translate(shift);
            let pos = class
                .index
                .iter()
                .position(|x| x == &windowed)
                .expect("block in its class");
            let mut poly = PolyA::zero();
            for (j, c) in class.kinv_at_one[pos].iter().enumerate() {
                poly.add_term(class.index[j].translate(-shift), c.clone());
            }
            out = out.mul(&poly);
        }
        Ok(out)
    }

    /// Expansion of the standard module class of `m` on the simple classes:
    /// row `m` of the transition matrix at `q = 1`.
    pub fn expand_standard(&mut self, m: &Multisegment) -> Result<DualExpansion, GrothError> {
        let mut terms: Vec<(Multisegment, BigInt)> = vec![(Multisegment::empty(), BigInt::one())];
        for block in support_blocks(m) {
            let (class, shift) = self.block_class(&block)?;
            let windowed = block.translate(shift);
            let pos = class
                .index
                .iter()
                .position(|x| x == &windowed)
                .expect("block in its class");
            let mut next = Vec::new();
            for (base, c) in &terms {
                for (j, k) in class.k_at_one[pos].iter().enumerate() {
                    if !k.is_zero() {
                        next.push((base.union(&class.index[j].translate(-shift)), c * k));
                    }
                }
            }
            terms = next;
        }
        let mut out = DualExpansion::default();
        for (m, c) in terms {
            *out.terms.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Ok(out)
    }

    /// Expand a product of dual canonical elements on the dual canonical
    /// basis by triangular elimination against leading monomials. Every
    /// coefficient must come out a nonnegative integer.
    pub fn product_expand(&mut self, ms: &[Multisegment]) -> Result<DualExpansion, GrothError> {
        let mut prod = PolyA::one();
        for m in ms {
            prod = prod.mul(&self.dual_poly(m)?);
        }
        let mut out = DualExpansion::default();
        while !prod.is_zero() {
            let p = prod.min_monomial().unwrap().clone();
            let c = prod.coeff(&p);
            if c.is_negative() {
                return Err(GrothError::NegativeCoefficient {
                    index: p.to_string(),
                    coeff: c.to_string(),
                });
            }
            let dual = self.dual_poly(&p)?;
            prod.sub_scaled(&dual, &c);
            if !prod.coeff(&p).is_zero() {
                return Err(GrothError::ExpansionStuck);
            }
            out.terms.insert(p, c);
        }
        Ok(out)
    }

    /// Simplicity of the induction product of the simples labelled by `ms`:
    /// true exactly when the product expansion is one term with coefficient
    /// one. Returns the witness expansion either way.
    pub fn is_simple_product(
        &mut self,
        ms: &[Multisegment],
    ) -> Result<(bool, DualExpansion), GrothError> {
        let exp = self.product_expand(ms)?;
        Ok((exp.is_single(), exp))
    }

    /// JSON report for a product query.
    pub fn simple_product_report(&mut self, ms: &[Multisegment]) -> Result<Value, GrothError> {
        let (simple, exp) = self.is_simple_product(ms)?;
        Ok(json!({
            "inputs": ms.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "simple": simple,
            "expansion": exp.to_json(),
        }))
    }
}

/// Restriction coproduct of a segment class: the parabolic splits of the
/// segment, oriented with the later sub-segment in the first tensor factor
/// so that the coordinate coproduct below is matched term by term.
pub fn segment_restriction_terms(seg: &Segment) -> Vec<(Multisegment, Multisegment)> {
    let mut out = Vec::new();
    out.push((Multisegment::single(*seg), Multisegment::empty()));
    for k in seg.start()..seg.end() {
        // split [i,j] = [i,k] | [k+1,j]
        out.push((
            Multisegment::single(Segment::new(k + 1, seg.end()).unwrap()),
            Multisegment::single(Segment::new(seg.start(), k).unwrap()),
        ));
    }
    out.push((Multisegment::empty(), Multisegment::single(*seg)));
    out
}

/// Coordinate-ring coproduct of the variable of a segment: matrix
/// multiplication of unitriangular matrices, middle terms indexed by the
/// intermediate row.
pub fn coordinate_coproduct_terms(seg: &Segment) -> Vec<(Multisegment, Multisegment)> {
    // the variable of [i,j] is the (j+1, i) coordinate; middle terms pair
    // (j+1, k) with (k, i) for i < k < j+1, i.e. segments [k,j] and [i,k-1]
    let mut out = Vec::new();
    out.push((Multisegment::single(*seg), Multisegment::empty()));
    for k in (seg.start() + 1)..=seg.end() {
        out.push((
            Multisegment::single(Segment::new(k, seg.end()).unwrap()),
            Multisegment::single(Segment::new(seg.start(), k - 1).unwrap()),
        ));
    }
    out.push((Multisegment::empty(), Multisegment::single(*seg)));
    out
}

/// Compatibility of comultiplication with the monomial map on all segment
/// generators of a window: for each segment, the restriction terms mapped
/// through the monomial map must equal the coordinate coproduct terms.
pub fn bialgebra_check(window_rank: usize) -> Vec<(Segment, bool)> {
    let mut out = Vec::new();
    for i in 1..window_rank as i64 {
        for j in i..window_rank as i64 {
            let seg = Segment::new(i, j).unwrap();
            let mut lhs: Vec<(Multisegment, Multisegment)> = segment_restriction_terms(&seg);
            let mut rhs: Vec<(Multisegment, Multisegment)> = coordinate_coproduct_terms(&seg);
            lhs.sort();
            rhs.sort();
            out.push((seg, lhs == rhs));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    #[test]
    fn phi_standard_is_monomial() {
        let p = phi_standard(&ms("[1,2]"));
        assert_eq!(p.coeff(&ms("[1,2]")), BigInt::one());
        assert_eq!(p.terms().count(), 1);
        let p = phi_standard(&Multisegment::empty());
        assert_eq!(p, PolyA::one());
    }

    #[test]
    fn dual_poly_examples() {
        let mut eng = DualBasisEngine::new();
        // single segment: standard = simple
        let p = eng.dual_poly(&ms("[0,1]")).unwrap();
        assert_eq!(p, phi_standard(&ms("[0,1]")));
        // two adjacent points: t_m - t_merged
        let p = eng.dual_poly(&ms("[0,0]+[1,1]")).unwrap();
        assert_eq!(p.coeff(&ms("[0,0]+[1,1]")), BigInt::one());
        assert_eq!(p.coeff(&ms("[0,1]")), BigInt::from(-1));
        assert_eq!(p.terms().count(), 2);
        // degree-1 space
        let p = eng.dual_poly(&ms("[0,0]")).unwrap();
        assert_eq!(p, phi_standard(&ms("[0,0]")));
    }

    #[test]
    fn expand_standard_examples() {
        let mut eng = DualBasisEngine::new();
        let e = eng.expand_standard(&ms("[2,5]")).unwrap();
        assert!(e.is_single());
        assert_eq!(e.coeff(&ms("[2,5]")), BigInt::one());
        let e = eng.expand_standard(&ms("[0,0]+[1,1]")).unwrap();
        assert_eq!(e.coeff(&ms("[0,0]+[1,1]")), BigInt::one());
        assert_eq!(e.coeff(&ms("[0,1]")), BigInt::one());
        assert_eq!(e.len(), 2);
        // every term of the support lies above the base multisegment
        for (n, _) in e.terms() {
            assert!(ms("[0,0]+[1,1]").zel_leq(n));
        }
    }

    #[test]
    fn product_expand_examples() {
        let mut eng = DualBasisEngine::new();
        // adjacent points: two terms
        let e = eng.product_expand(&[ms("[0,0]"), ms("[1,1]")]).unwrap();
        assert_eq!(e.coeff(&ms("[0,0]+[1,1]")), BigInt::one());
        assert_eq!(e.coeff(&ms("[0,1]")), BigInt::one());
        assert_eq!(e.len(), 2);
        // distant points: single term
        let e = eng.product_expand(&[ms("[0,0]"), ms("[2,2]")]).unwrap();
        assert!(e.is_single());
        assert_eq!(e.coeff(&ms("[0,0]+[2,2]")), BigInt::one());
        // one factor: itself
        let e = eng.product_expand(&[ms("[0,1]+[3,3]")]).unwrap();
        assert!(e.is_single());
    }

    #[test]
    fn product_commutativity() {
        let mut eng = DualBasisEngine::new();
        let a = ms("[0,1]");
        let b = ms("[1,2]");
        let c = ms("[0,0]");
        let e1 = eng.product_expand(&[a.clone(), b.clone(), c.clone()]).unwrap();
        let e2 = eng.product_expand(&[c, a, b]).unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn simple_product_examples() {
        let mut eng = DualBasisEngine::new();
        let (s, _) = eng.is_simple_product(&[ms("[0,0]"), ms("[1,1]")]).unwrap();
        assert!(!s);
        let (s, _) = eng.is_simple_product(&[ms("[0,0]"), ms("[2,2]")]).unwrap();
        assert!(s);
    }

    #[test]
    fn block_factorization_consistency() {
        // a gap-separated product equals the product of its blocks computed
        // through a single merged window
        let mut eng = DualBasisEngine::new();
        let p1 = eng.dual_poly(&ms("[0,1]+[0,0]")).unwrap();
        let p2 = eng.dual_poly(&ms("[4,4]+[5,5]")).unwrap();
        let joint = eng.dual_poly(&ms("[0,1]+[0,0]+[4,4]+[5,5]")).unwrap();
        assert_eq!(p1.mul(&p2), joint);
    }

    #[test]
    fn leading_monomial_triangularity() {
        let mut eng = DualBasisEngine::new();
        for m in ["[0,2]+[1,1]", "[0,0]+[1,1]+[2,2]", "2[0,1]"] {
            let m = ms(m);
            let p = eng.dual_poly(&m).unwrap();
            assert_eq!(p.coeff(&m), BigInt::one());
            for (n, _) in p.terms() {
                assert!(m.zel_leq(n), "support of dual element of {m} contains {n}");
            }
        }
    }

    #[test]
    fn bialgebra_on_generators() {
        // single point: no middle terms
        let lhs = segment_restriction_terms(&Segment::new(1, 1).unwrap());
        assert_eq!(lhs.len(), 2);
        // [1,2]: one middle term, matching the coordinate side
        let l = segment_restriction_terms(&Segment::new(1, 2).unwrap());
        let r = coordinate_coproduct_terms(&Segment::new(1, 2).unwrap());
        assert_eq!(l, r);
        assert!(l.contains(&(ms("[2,2]"), ms("[1,1]"))));
        // all generators in windows up to rank 5
        for (seg, ok) in bialgebra_check(5) {
            assert!(ok, "compatibility fails on {seg}");
        }
    }
}
