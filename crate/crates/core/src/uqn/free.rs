//! Free-algebra realization: weight spaces as complements of the quantum
//! Serre span, PBW monomials as explicit noncommutative polynomials in the
//! Chevalley generators, and the bar involution.

use std::collections::BTreeMap;

use crate::arith::{Laurent, RatFun};
use crate::linalg::rref;
use crate::multisegments::{Multisegment, Segment};

use super::{cartan, weight_degree, Weight, Window, UqnError};

/// A word in the Chevalley generators, letters in `1..=rank-1`.
pub type Word = Vec<u8>;

/// Element of the free algebra on the Chevalley generators: finitely many
/// words with rational-function coefficients. All words of one element are
/// expected to share a letter multiset (one weight per graded component).
#[derive(Clone, PartialEq, Debug, Default)]
pub struct FreeElement {
    terms: BTreeMap<Word, RatFun>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement::default()
    }

    pub fn generator(i: u8) -> Self {
        FreeElement::from_word(vec![i])
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, RatFun::one());
        FreeElement { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFun)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> RatFun {
        self.terms.get(w).cloned().unwrap_or_else(RatFun::zero)
    }

    pub fn add_term(&mut self, w: Word, c: RatFun) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                let v = e.get().add(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&RatFun::from_i64(-1)))
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|(w, a)| (w.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// Concatenation product of the free algebra.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = FreeElement::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.mul(c2));
            }
        }
        out
    }

    /// Weight of the element, read off any word; `None` for zero.
    pub fn weight(&self, letters: usize) -> Option<Weight> {
        let (w, _) = self.terms.iter().next()?;
        let mut out = vec![0u64; letters];
        for &l in w {
            out[(l - 1) as usize] += 1;
        }
        Some(out)
    }
}

/// Bar involution on the free algebra: fixes every word, conjugates each
/// coefficient by `q -> q^{-1}`. The quantum Serre relators are bar-stable,
/// so this descends to the quotient.
pub fn bar_element(x: &FreeElement) -> FreeElement {
    FreeElement {
        terms: x.terms.iter().map(|(w, c)| (w.clone(), c.bar())).collect(),
    }
}

/// Root vector of a segment as a free-algebra element: generators for
/// length-one segments, and the q-bracket
/// `E_[i,j] = f_j E_[i,j-1] - q E_[i,j-1] f_j` recursively.
pub fn root_vector(seg: &Segment) -> FreeElement {
    if seg.start() == seg.end() {
        return FreeElement::generator(seg.start() as u8);
    }
    let inner = root_vector(&Segment::new(seg.start(), seg.end() - 1).unwrap());
    let last = FreeElement::generator(seg.end() as u8);
    last.mul(&inner)
        .sub(&inner.mul(&last).scale(&RatFun::var()))
}

/// The PBW monomial of a multisegment: ordered product of root-vector
/// divided powers, factors in increasing PBW order of the segments, with
/// symmetric quantum factorials in the denominators.
pub fn pbw_expand(window: &Window, m: &Multisegment) -> Result<FreeElement, UqnError> {
    let mut out = FreeElement::from_word(Vec::new());
    for (seg, mult) in m.iter() {
        if !window.contains_segment(seg) {
            return Err(UqnError::SegmentOutOfWindow(*seg, window.rank()));
        }
        let rv = root_vector(seg);
        for _ in 0..mult {
            out = out.mul(&rv);
        }
        let fact = RatFun::from_laurent(&Laurent::quantum_factorial(mult));
        out = out.scale(&fact.inverse().expect("quantum factorial nonzero"));
    }
    Ok(out)
}

/// Quantum Serre relators of the window: `f_i^2 f_j - (q + q^{-1}) f_i f_j
/// f_i + f_j f_i^2` for adjacent letters and plain commutators for distant
/// ones.
fn serre_relators(window: &Window) -> Vec<FreeElement> {
    let n = window.letters() as u8;
    let mut out = Vec::new();
    let qq = RatFun::from_laurent(&Laurent::quantum_int(2));
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let fi = FreeElement::generator(i);
            let fj = FreeElement::generator(j);
            if cartan(i, j) == -1 {
                let r = fi
                    .mul(&fi)
                    .mul(&fj)
                    .sub(&fi.mul(&fj).mul(&fi).scale(&qq))
                    .add(&fj.mul(&fi).mul(&fi));
                out.push(r);
            } else if i < j {
                out.push(fi.mul(&fj).sub(&fj.mul(&fi)));
            }
        }
    }
    out
}

/// All words of a weight, lexicographically sorted.
fn words_of_weight(weight: &Weight) -> Vec<Word> {
    fn rec(remaining: &mut Vec<u64>, acc: &mut Word, out: &mut Vec<Word>) {
        if remaining.iter().all(|&c| c == 0) {
            out.push(acc.clone());
            return;
        }
        for i in 0..remaining.len() {
            if remaining[i] > 0 {
                remaining[i] -= 1;
                acc.push((i + 1) as u8);
                rec(remaining, acc, out);
                acc.pop();
                remaining[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut weight.clone(), &mut Vec::new(), &mut out);
    out
}

/// A weight space of the quotient algebra: words of the weight, the reduced
/// echelon of the Serre-span inside them, and the complement basis.
pub struct WeightSpace {
    weight: Weight,
    words: Vec<Word>,
    word_index: BTreeMap<Word, usize>,
    /// reduced echelon rows of the Serre span
    span: Vec<Vec<RatFun>>,
}

/// Spanning-set reduction of the Serre ideal's weight component: the span of
/// `x * relator * y` over all relators and complementary word pairs, as a
/// reduced echelon, together with the complement (non-pivot) words.
pub fn weight_basis(window: &Window, weight: &Weight) -> Result<WeightSpace, UqnError> {
    if weight_degree(weight) > window.max_degree() as u64 {
        return Err(UqnError::WeightTooLarge);
    }
    let words = words_of_weight(weight);
    let word_index: BTreeMap<Word, usize> = words
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();
    let mut rows: Vec<Vec<RatFun>> = Vec::new();
    for relator in serre_relators(window) {
        let rel_weight = relator.weight(window.letters()).expect("nonzero relator");
        if (0..weight.len()).any(|i| rel_weight[i] > weight[i]) {
            continue;
        }
        let rest: Weight = (0..weight.len()).map(|i| weight[i] - rel_weight[i]).collect();
        // all splits of the remaining weight into a prefix and a suffix
        let prefixes = sub_weights(&rest);
        for pre in prefixes {
            let suf: Weight = (0..rest.len()).map(|i| rest[i] - pre[i]).collect();
            for x in words_of_weight(&pre) {
                for y in words_of_weight(&suf) {
                    let mut row = vec![RatFun::zero(); words.len()];
                    for (w, c) in relator.terms() {
                        let mut full = x.clone();
                        full.extend_from_slice(w);
                        full.extend_from_slice(&y);
                        let idx = word_index[&full];
                        row[idx] = row[idx].add(c);
                    }
                    rows.push(row);
                }
            }
        }
    }
    rref(&mut rows);
    Ok(WeightSpace {
        weight: weight.clone(),
        words,
        word_index,
        span: rows,
    })
}

/// All componentwise-smaller weights, including zero and the weight itself.
fn sub_weights(w: &Weight) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for &c in w {
        let mut next = Vec::new();
        for partial in out {
            for k in 0..=c {
                let mut p = partial.clone();
                p.push(k);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl WeightSpace {
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// Dimension of the quotient weight space.
    pub fn dim(&self) -> usize {
        self.words.len() - self.span.len()
    }

    /// Normal form of an element modulo the Serre span, as coordinates over
    /// all words of the weight (entries at pivot words are zero).
    pub fn normal_form(&self, x: &FreeElement) -> Vec<RatFun> {
        let mut v = vec![RatFun::zero(); self.words.len()];
        for (w, c) in x.terms() {
            let idx = *self
                .word_index
                .get(w)
                .expect("element has the weight of this space");
            v[idx] = v[idx].add(c);
        }
        for row in &self.span {
            let p = row.iter().position(|c| !c.is_zero()).expect("nonzero row");
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for j in 0..v.len() {
                if !row[j].is_zero() {
                    v[j] = v[j].sub(&factor.mul(&row[j]));
                }
            }
        }
        v
    }
}
