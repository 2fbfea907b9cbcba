//! Simplicity testing and composition series for explicit modules.
//!
//! The commuting `y` generators decompose a module into joint generalized
//! eigenspaces. The spectral projector onto each block is a polynomial in
//! the `y`'s, hence lies in the image algebra, so the algebra splits as the
//! direct sum of its blocks and the Burnside span can be accumulated
//! block-by-block: a breadth-first closure under left multiplication by
//! generator components, with rank tracked by exact row reduction inside
//! each (source, target) component. The total rank equals the dimension of
//! the image algebra; the module is simple exactly when that reaches the
//! square of its dimension.
//!
//! Composition series come from an invariant-subspace search (closures of
//! joint eigenvectors, then pencils, then the radical of the image algebra
//! via the trace form), and each simple factor is identified by matching
//! its joint spectrum character against a library built top-down along the
//! degeneration order from explicit standard modules.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::{rat_pow, u_exponent_of, Scalar};
use crate::linalg::{Field, SpanBuilder};
use crate::multisegments::{multisegments_with_dim_vector, Multisegment};

use super::{induce, segment_module, FiniteModule, HeckeError, QMat};

/// Dimension bound for composition-series computations.
pub const COMPOSITION_DIM_BOUND: usize = 100;

/// Joint generalized eigenspace data of the commuting `y` family.
struct BlockDecomposition {
    /// per block: the joint eigenvalue of each y, and a basis in original
    /// coordinates
    blocks: Vec<(Vec<Scalar>, Vec<Vec<Scalar>>)>,
    /// change of basis: columns are the block bases concatenated
    p: QMat,
    p_inv: QMat,
    /// block start offsets in the new coordinates
    offsets: Vec<usize>,
}

fn generalized_eigenspace(op: &QMat, ev: &Scalar, ambient_dim: usize) -> Vec<Vec<Scalar>> {
    // kernel of (op - ev)^k for stabilizing k
    let shifted = op.sub(&QMat::scalar(op.rows(), ev));
    let mut power = shifted.clone();
    let mut prev = 0usize;
    loop {
        let ker = power.kernel();
        if ker.len() == prev || ker.len() == ambient_dim {
            return ker;
        }
        prev = ker.len();
        power = power.mul(&shifted);
    }
}

fn block_decomposition(m: &FiniteModule) -> Result<BlockDecomposition, HeckeError> {
    // start from the whole space, refine by each y
    let mut blocks: Vec<(Vec<Scalar>, Vec<Vec<Scalar>>)> = vec![(
        Vec::new(),
        (0..m.dim)
            .map(|i| {
                let mut v = vec![<Scalar as Zero>::zero(); m.dim];
                v[i] = <Scalar as One>::one();
                v
            })
            .collect(),
    )];
    for (j, y) in m.y.iter().enumerate() {
        let mut next = Vec::new();
        for (chi, basis) in blocks {
            // restrict y to the block
            let restricted = y
                .restrict(&basis)
                .ok_or(HeckeError::RelationViolation("y preserves blocks"))?;
            let mut found = 0usize;
            for cand in &m.y_candidates {
                let sub = generalized_eigenspace(&restricted, cand, basis.len());
                if sub.is_empty() {
                    continue;
                }
                found += sub.len();
                let mut chi2 = chi.clone();
                chi2.push(cand.clone());
                // map block-local coordinates back to the original ones
                let sub_basis: Vec<Vec<Scalar>> = sub
                    .iter()
                    .map(|loc| {
                        let mut v = vec![<Scalar as Zero>::zero(); m.dim];
                        for (k, c) in loc.iter().enumerate() {
                            if !Zero::is_zero(c) {
                                for (vi, bi) in v.iter_mut().zip(basis[k].iter()) {
                                    *vi += c * bi;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push((chi2, sub_basis));
            }
            if found != basis.len() {
                return Err(HeckeError::EigenvalueNotFound(j + 1));
            }
        }
        blocks = next;
    }
    let mut p = QMat::zeros(m.dim, m.dim);
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut col = 0usize;
    for (_, basis) in &blocks {
        offsets.push(col);
        for v in basis {
            p.set_column(col, v);
            col += 1;
        }
    }
    let p_inv = p.inverse().expect("block bases span");
    Ok(BlockDecomposition {
        blocks,
        p,
        p_inv,
        offsets,
    })
}

/// One component of an algebra element in block coordinates.
#[derive(Clone)]
struct BlockComponent<F> {
    src: usize,
    dst: usize,
    /// dense (dst_size x src_size) matrix, row-major
    mat: Vec<F>,
}

/// Outcome of one closure run.
enum ClosureOutcome {
    /// span dimension reached the square of the module dimension
    Full,
    /// worklist drained below the target rank
    Drained,
}

/// Breadth-first closure of the generator components under products, with
/// rank tracked per (src, dst) class by exact row reduction over `F`.
///
/// The span is the whole matrix algebra exactly when every diagonal class
/// is full and every off-diagonal class is nonzero: an off-diagonal class
/// is a bimodule over the two diagonal classes, and a nonzero sub-bimodule
/// of a hom space between full matrix algebras is the whole space. That
/// condition ends the run early on full spans.
fn component_closure<F: Field>(
    sizes: &[usize],
    gen_components: &[BlockComponent<F>],
    target: usize,
) -> ClosureOutcome {
    let nblocks = sizes.len();
    let mut by_src: Vec<Vec<&BlockComponent<F>>> = vec![Vec::new(); nblocks];
    for g in gen_components {
        by_src[g.src].push(g);
    }
    let mut spans: BTreeMap<(usize, usize), SpanBuilder<F>> = BTreeMap::new();
    let mut worklist: Vec<BlockComponent<F>> = Vec::new();
    let mut total_rank = 0usize;
    let push = |el: BlockComponent<F>,
                    spans: &mut BTreeMap<(usize, usize), SpanBuilder<F>>,
                    worklist: &mut Vec<BlockComponent<F>>,
                    total_rank: &mut usize| {
        let span = spans
            .entry((el.src, el.dst))
            .or_insert_with(|| SpanBuilder::new(sizes[el.src] * sizes[el.dst], false));
        if span.insert(el.mat.clone()) {
            *total_rank += 1;
            worklist.push(el);
        }
    };
    let full_by_structure = |spans: &BTreeMap<(usize, usize), SpanBuilder<F>>| -> bool {
        (0..nblocks).all(|b| {
            spans
                .get(&(b, b))
                .map_or(false, |s| s.rank() == sizes[b] * sizes[b])
        }) && (0..nblocks).all(|b| {
            (0..nblocks).all(|c| b == c || spans.get(&(b, c)).map_or(false, |s| s.rank() > 0))
        })
    };
    for b in 0..nblocks {
        let mut mat = vec![F::zero(); sizes[b] * sizes[b]];
        for i in 0..sizes[b] {
            mat[i * sizes[b] + i] = F::one();
        }
        push(
            BlockComponent { src: b, dst: b, mat },
            &mut spans,
            &mut worklist,
            &mut total_rank,
        );
    }
    while let Some(el) = worklist.pop() {
        if total_rank == target || full_by_structure(&spans) {
            return ClosureOutcome::Full;
        }
        for g in by_src[el.dst].clone() {
            let class = (el.src, g.dst);
            if let Some(span) = spans.get(&class) {
                if span.rank() == sizes[class.0] * sizes[class.1] {
                    continue; // saturated
                }
            }
            // product g * el : src -> g.dst
            let (rs, ks, cs) = (sizes[g.dst], sizes[el.dst], sizes[el.src]);
            let mut mat = vec![F::zero(); rs * cs];
            for r in 0..rs {
                for k in 0..ks {
                    let a = &g.mat[r * ks + k];
                    if Field::is_zero(a) {
                        continue;
                    }
                    for c in 0..cs {
                        let b = &el.mat[k * cs + c];
                        if !Field::is_zero(b) {
                            mat[r * cs + c] = Field::add(&mat[r * cs + c], &Field::mul(a, b));
                        }
                    }
                }
            }
            push(
                BlockComponent {
                    src: el.src,
                    dst: g.dst,
                    mat,
                },
                &mut spans,
                &mut worklist,
                &mut total_rank,
            );
        }
    }
    if total_rank == target || full_by_structure(&spans) {
        ClosureOutcome::Full
    } else {
        ClosureOutcome::Drained
    }
}

/// Arithmetic modulo a fixed 61-bit Mersenne prime, used only to certify
/// fullness of a span: the rank over the prime field bounds the rational
/// rank from below, so a full modular span is an exact proof of fullness.
/// Nothing is ever concluded from a modular rank deficit.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct ModP(u64);

const MOD_P: u64 = (1u64 << 61) - 1;

impl ModP {
    fn from_scalar(x: &Scalar) -> Option<ModP> {
        let p = num_bigint::BigInt::from(MOD_P);
        let num = ((x.numer() % &p) + &p) % &p;
        let den = ((x.denom() % &p) + &p) % &p;
        let num: u64 = num.try_into().ok()?;
        let den: u64 = den.try_into().ok()?;
        if den == 0 {
            return None; // denominator divisible by the prime
        }
        Some(ModP(mulmod(num, powmod(den, MOD_P - 2))))
    }
}

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % MOD_P as u128) as u64
}

fn powmod(mut b: u64, mut e: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

impl Field for ModP {
    fn zero() -> Self {
        ModP(0)
    }
    fn one() -> Self {
        ModP(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        let s = self.0 + rhs.0;
        ModP(if s >= MOD_P { s - MOD_P } else { s })
    }
    fn sub(&self, rhs: &Self) -> Self {
        ModP(if self.0 >= rhs.0 {
            self.0 - rhs.0
        } else {
            self.0 + MOD_P - rhs.0
        })
    }
    fn mul(&self, rhs: &Self) -> Self {
        ModP(mulmod(self.0, rhs.0))
    }
    fn div(&self, rhs: &Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in prime field");
        ModP(mulmod(self.0, powmod(rhs.0, MOD_P - 2)))
    }
    fn neg(&self) -> Self {
        ModP(if self.0 == 0 { 0 } else { MOD_P - self.0 })
    }
}

/// Burnside simplicity test: the span of all products of generator matrices
/// has dimension `dim^2` exactly when the module is simple.
///
/// The closure first runs over the prime field, which can only certify
/// fullness; whenever that certificate is not obtained (including the rare
/// case of a denominator divisible by the prime), the closure reruns with
/// exact rational arithmetic and its rank is the answer.
pub fn burnside_is_simple(m: &FiniteModule) -> Result<bool, HeckeError> {
    if m.dim == 0 {
        return Ok(false);
    }
    if m.dim == 1 {
        return Ok(true);
    }
    let bd = block_decomposition(m)?;
    let nblocks = bd.blocks.len();
    let sizes: Vec<usize> = bd.blocks.iter().map(|(_, b)| b.len()).collect();

    // generators in block coordinates
    let mut gen_components: Vec<BlockComponent<Scalar>> = Vec::new();
    for g in m.t.iter().chain(m.y.iter()) {
        let gb = bd.p_inv.mul(&g.mul(&bd.p));
        for src in 0..nblocks {
            for dst in 0..nblocks {
                let mut mat = Vec::with_capacity(sizes[dst] * sizes[src]);
                let mut nonzero = false;
                for r in 0..sizes[dst] {
                    for c in 0..sizes[src] {
                        let v = gb.at(bd.offsets[dst] + r, bd.offsets[src] + c).clone();
                        nonzero |= !Zero::is_zero(&v);
                        mat.push(v);
                    }
                }
                if nonzero {
                    gen_components.push(BlockComponent { src, dst, mat });
                }
            }
        }
    }
    let target: usize = m.dim * m.dim;

    // modular certificate first
    let modular: Option<Vec<BlockComponent<ModP>>> = gen_components
        .iter()
        .map(|g| {
            let mat: Option<Vec<ModP>> = g.mat.iter().map(ModP::from_scalar).collect();
            mat.map(|mat| BlockComponent {
                src: g.src,
                dst: g.dst,
                mat,
            })
        })
        .collect();
    if let Some(gens_p) = modular {
        if let ClosureOutcome::Full = component_closure(&sizes, &gens_p, target) {
            return Ok(true);
        }
    }

    // exact closure decides
    match component_closure(&sizes, &gen_components, target) {
        ClosureOutcome::Full => Ok(true),
        ClosureOutcome::Drained => Ok(false),
    }
}

/// Joint spectrum character: multiset of exponent tuples of the `y` family
/// on the joint generalized eigenspaces.
pub type Character = BTreeMap<Vec<i64>, usize>;

/// Character of a module; every eigenvalue must be an integer power of `u`.
pub fn character(m: &FiniteModule) -> Result<Character, HeckeError> {
    let bd = block_decomposition(m)?;
    let mut out = Character::new();
    for (chi, basis) in &bd.blocks {
        let tuple: Result<Vec<i64>, HeckeError> = chi
            .iter()
            .map(|v| u_exponent_of(v, &m.u, 64).ok_or(HeckeError::NotAPowerOfU(v.clone())))
            .collect();
        *out.entry(tuple?).or_insert(0) += basis.len();
    }
    Ok(out)
}

/// Closure of a set of vectors under the generator action: the smallest
/// invariant subspace containing them.
fn invariant_closure(m: &FiniteModule, seeds: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut span = SpanBuilder::<Scalar>::new(m.dim, false);
    let mut worklist: Vec<Vec<Scalar>> = Vec::new();
    for s in seeds {
        if span.insert(s.clone()) {
            worklist.push(s.clone());
        }
    }
    while let Some(v) = worklist.pop() {
        for g in m.t.iter().chain(m.y.iter()) {
            let w = g.apply(&v);
            if span.insert(w.clone()) {
                worklist.push(w);
            }
        }
    }
    span.rows().to_vec()
}

/// Restrict the module to an invariant subspace given by a basis.
fn sub_module(m: &FiniteModule, basis: &[Vec<Scalar>]) -> Result<FiniteModule, HeckeError> {
    let restrict = |g: &QMat| {
        g.restrict(basis)
            .ok_or(HeckeError::RelationViolation("subspace not invariant"))
    };
    let t: Result<Vec<QMat>, _> = m.t.iter().map(restrict).collect();
    let y: Result<Vec<QMat>, _> = m.y.iter().map(restrict).collect();
    Ok(FiniteModule {
        n: m.n,
        u: m.u.clone(),
        dim: basis.len(),
        t: t?,
        y: y?,
        y_candidates: m.y_candidates.clone(),
    })
}

/// Quotient by an invariant subspace: extend to a full basis and cut the
/// complementary block of the transformed action.
fn quotient_module(m: &FiniteModule, basis: &[Vec<Scalar>]) -> Result<FiniteModule, HeckeError> {
    let mut span = SpanBuilder::<Scalar>::new(m.dim, false);
    for b in basis {
        span.insert(b.clone());
    }
    let mut full: Vec<Vec<Scalar>> = basis.to_vec();
    for i in 0..m.dim {
        let mut v = vec![<Scalar as Zero>::zero(); m.dim];
        v[i] = <Scalar as One>::one();
        if span.insert(v.clone()) {
            full.push(v);
        }
    }
    let mut p = QMat::zeros(m.dim, m.dim);
    for (j, v) in full.iter().enumerate() {
        p.set_column(j, v);
    }
    let p_inv = p.inverse().expect("full basis");
    let s = basis.len();
    let q = m.dim - s;
    let cut = |g: &QMat| -> QMat {
        let gb = p_inv.mul(&g.mul(&p));
        QMat::from_fn(q, q, |i, j| gb.at(s + i, s + j).clone())
    };
    let module = FiniteModule {
        n: m.n,
        u: m.u.clone(),
        dim: q,
        t: m.t.iter().map(&cut).collect(),
        y: m.y.iter().map(&cut).collect(),
        y_candidates: m.y_candidates.clone(),
    };
    Ok(module)
}

/// Joint true eigenvectors of the `y` family, grouped by eigenvalue tuple.
fn joint_eigenvectors(m: &FiniteModule) -> Result<Vec<Vec<Vec<Scalar>>>, HeckeError> {
    let bd = block_decomposition(m)?;
    let mut out = Vec::new();
    for (chi, basis) in &bd.blocks {
        // inside the block, intersect the true kernels of (y_j - chi_j)
        let mut current: Vec<Vec<Scalar>> = basis.clone();
        for (j, y) in m.y.iter().enumerate() {
            if current.is_empty() {
                break;
            }
            let restricted = y
                .restrict(&current)
                .ok_or(HeckeError::RelationViolation("y preserves blocks"))?;
            let ker = restricted
                .sub(&QMat::scalar(current.len(), &chi[j]))
                .kernel();
            current = ker
                .iter()
                .map(|loc| {
                    let mut v = vec![<Scalar as Zero>::zero(); m.dim];
                    for (k, c) in loc.iter().enumerate() {
                        if !Zero::is_zero(c) {
                            for (vi, bi) in v.iter_mut().zip(current[k].iter()) {
                                *vi += c * bi;
                            }
                        }
                    }
                    v
                })
                .collect();
        }
        if !current.is_empty() {
            out.push(current);
        }
    }
    Ok(out)
}

/// Find a basis of some proper nonzero invariant subspace, or `None` when
/// the module is simple. Tries closures of joint eigenvectors, pencils of
/// eigenvector pairs, then the radical of the image algebra.
fn find_proper_submodule(m: &FiniteModule) -> Result<Option<Vec<Vec<Scalar>>>, HeckeError> {
    let eigen_groups = joint_eigenvectors(m)?;
    for group in &eigen_groups {
        for v in group {
            let closure = invariant_closure(m, std::slice::from_ref(v));
            if closure.len() < m.dim {
                return Ok(Some(closure));
            }
        }
        // whole-eigenspace closure
        if group.len() > 1 {
            let closure = invariant_closure(m, group);
            if closure.len() < m.dim {
                return Ok(Some(closure));
            }
        }
    }
    // pencils inside each joint eigenspace
    let pencil: Vec<Scalar> = ["1", "-1", "2", "-2", "1/2", "3", "-1/2"]
        .iter()
        .map(|s| crate::arith::parse_rational(s).unwrap())
        .collect();
    for group in &eigen_groups {
        for a in 0..group.len() {
            for b in (a + 1)..group.len() {
                for t in &pencil {
                    let v: Vec<Scalar> = group[a]
                        .iter()
                        .zip(group[b].iter())
                        .map(|(x, y)| x + t * y)
                        .collect();
                    let closure = invariant_closure(m, std::slice::from_ref(&v));
                    if closure.len() < m.dim {
                        return Ok(Some(closure));
                    }
                }
            }
        }
    }
    // radical of the image algebra via the trace form; rad * M is invariant
    let span = algebra_span(m);
    let k = span.len();
    let gram: Vec<Vec<Scalar>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let prod = span[i].mul(&span[j]);
                    (0..m.dim).fold(<Scalar as Zero>::zero(), |acc, d| acc + prod.at(d, d))
                })
                .collect()
        })
        .collect();
    let rad_coeffs = crate::linalg::nullspace(&gram);
    if !rad_coeffs.is_empty() {
        let mut images = Vec::new();
        for coeffs in &rad_coeffs {
            let mut x = QMat::zeros(m.dim, m.dim);
            for (i, c) in coeffs.iter().enumerate() {
                if !Zero::is_zero(c) {
                    x = x.add(&span[i].scale(c));
                }
            }
            for j in 0..m.dim {
                images.push(x.column(j));
            }
        }
        let closure = invariant_closure(m, &images);
        if !closure.is_empty() && closure.len() < m.dim {
            return Ok(Some(closure));
        }
    }
    Ok(None)
}

/// Basis of the image algebra as explicit matrices (identity plus closure
/// of the generators under products). Only used on small modules.
fn algebra_span(m: &FiniteModule) -> Vec<QMat> {
    let d = m.dim;
    let mut span = SpanBuilder::<Scalar>::new(d * d, false);
    let mut mats: Vec<QMat> = Vec::new();
    let flat = |g: &QMat| -> Vec<Scalar> {
        let mut v = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                v.push(g.at(i, j).clone());
            }
        }
        v
    };
    let mut worklist = vec![QMat::identity(d)];
    while let Some(g) = worklist.pop() {
        if !span.insert(flat(&g)) {
            continue;
        }
        for h in m.t.iter().chain(m.y.iter()) {
            worklist.push(h.mul(&g));
        }
        mats.push(g);
    }
    mats
}

/// Characters of the composition factors of a module, with multiplicity.
fn factor_characters(m: &FiniteModule) -> Result<Vec<Character>, HeckeError> {
    if m.dim == 0 {
        return Ok(Vec::new());
    }
    if burnside_is_simple(m)? {
        return Ok(vec![character(m)?]);
    }
    let basis = find_proper_submodule(m)?.ok_or(HeckeError::SubmoduleSearchExhausted)?;
    let sub = sub_module(m, &basis)?;
    let quot = quotient_module(m, &basis)?;
    let mut out = factor_characters(&sub)?;
    out.extend(factor_characters(&quot)?);
    Ok(out)
}

/// Oracle with a per-weight-class library of simple-module characters,
/// built top-down along the degeneration order from standard modules.
pub struct OracleEngine {
    u: Scalar,
    library: BTreeMap<Vec<(i64, u64)>, Vec<(Multisegment, Character)>>,
}

impl OracleEngine {
    pub fn new(u: &Scalar) -> Result<Self, HeckeError> {
        super::validate_parameter(u)?;
        Ok(OracleEngine {
            u: u.clone(),
            library: BTreeMap::new(),
        })
    }

    pub fn u(&self) -> &Scalar {
        &self.u
    }

    /// The standard module of a multisegment: the induction product of its
    /// segment modules (any factor order gives the same class; segments are
    /// taken in PBW order for determinism).
    pub fn standard_module(&self, m: &Multisegment) -> Result<FiniteModule, HeckeError> {
        let segs = m.expanded();
        if segs.is_empty() {
            return Err(HeckeError::EmptyMultisegment);
        }
        let mut module = segment_module(&segs[0], &self.u)?;
        for seg in &segs[1..] {
            module = induce(&module, &segment_module(seg, &self.u)?)?;
        }
        Ok(module)
    }

    /// The evaluation module of a partition at `z = u^a`.
    pub fn evaluation_module_at(
        &self,
        lambda: &crate::partitions::Partition,
        a: i64,
    ) -> Result<FiniteModule, HeckeError> {
        super::evaluation_module(lambda, &rat_pow(&self.u, a), &self.u)
    }

    /// Characters of all simples of a weight class, keyed by multisegment.
    fn class_library(
        &mut self,
        dim_vector: &BTreeMap<i64, u64>,
    ) -> Result<&Vec<(Multisegment, Character)>, HeckeError> {
        let key: Vec<(i64, u64)> = dim_vector.iter().map(|(&p, &c)| (p, c)).collect();
        if !self.library.contains_key(&key) {
            let mut class = multisegments_with_dim_vector(dim_vector);
            // top-down: most merged first
            class.sort_by_key(|m| std::cmp::Reverse(m.order_key()));
            let mut known: Vec<(Multisegment, Character)> = Vec::new();
            for n in class {
                let standard = self.standard_module(&n)?;
                if standard.dim > COMPOSITION_DIM_BOUND {
                    return Err(HeckeError::DimensionBound(
                        standard.dim,
                        COMPOSITION_DIM_BOUND,
                    ));
                }
                let factors = factor_characters(&standard)?;
                let mut unmatched: Vec<Character> = Vec::new();
                for ch in factors {
                    if !known.iter().any(|(_, k)| k == &ch) {
                        unmatched.push(ch);
                    }
                }
                // the new simple appears exactly once on top of known ones
                unmatched.dedup();
                if unmatched.len() != 1 {
                    return Err(HeckeError::AmbiguousFactor(
                        unmatched.iter().map(|c| format!("{:?}", c)).collect(),
                    ));
                }
                known.push((n, unmatched.into_iter().next().unwrap()));
            }
            self.library.insert(key.clone(), known);
        }
        Ok(self.library.get(&key).unwrap())
    }

    /// Composition factors of a module, as a sorted multiset of
    /// multisegments identified by joint-spectrum characters.
    pub fn composition_factors(
        &mut self,
        m: &FiniteModule,
    ) -> Result<Vec<Multisegment>, HeckeError> {
        if m.dim > COMPOSITION_DIM_BOUND {
            return Err(HeckeError::DimensionBound(m.dim, COMPOSITION_DIM_BOUND));
        }
        let chars = factor_characters(m)?;
        // dimension vector of the class, read off any character tuple
        let full = character(m)?;
        let tuple = full.keys().next().ok_or(HeckeError::EmptyMultisegment)?;
        let mut dim_vector: BTreeMap<i64, u64> = BTreeMap::new();
        for &e in tuple {
            *dim_vector.entry(e).or_insert(0) += 1;
        }
        let lib = self.class_library(&dim_vector)?.clone();
        let mut out = Vec::new();
        for ch in chars {
            let hits: Vec<&Multisegment> = lib
                .iter()
                .filter(|(_, k)| k == &ch)
                .map(|(m, _)| m)
                .collect();
            match hits.as_slice() {
                [one] => out.push((*one).clone()),
                [] => {
                    return Err(HeckeError::AmbiguousFactor(vec![format!(
                        "unrecognized character {:?}",
                        ch
                    )]))
                }
                many => {
                    return Err(HeckeError::AmbiguousFactor(
                        many.iter().map(|m| m.to_string()).collect(),
                    ))
                }
            }
        }
        out.sort_by_key(|m| m.order_key());
        Ok(out)
    }

    /// Multiplicity matrix of a weight class: entry `(m, n)` is the number
    /// of times the simple of `n` occurs in the standard module of `m`.
    /// Index order matches `multisegments_with_dim_vector` sorted ascending.
    pub fn class_multiplicities(
        &mut self,
        dim_vector: &BTreeMap<i64, u64>,
    ) -> Result<(Vec<Multisegment>, Vec<Vec<u64>>), HeckeError> {
        let mut class = multisegments_with_dim_vector(dim_vector);
        class.sort_by_key(|m| m.order_key());
        let mut rows = Vec::with_capacity(class.len());
        for m in &class {
            let factors = self.composition_factors(&self.standard_module(m)?)?;
            let mut row = vec![0u64; class.len()];
            for f in factors {
                let j = class.iter().position(|x| x == &f).expect("factor in class");
                row[j] += 1;
            }
            rows.push(row);
        }
        Ok((class, rows))
    }
}
