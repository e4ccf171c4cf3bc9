//! The Casson-Walker-Lescop invariant of integral surgery on a framed link,
//! by the global surgery formula
//!
//! `lambda = sign(L) sum_J det(E(L_{N\J}; J)) a_1(L_J)
//!         + sign(L) sum_J det(E(L_{N\J})) (-1)^|J| theta(L_J) / 24
//!         + |H_1| Sig(E(L)) / 8`
//!
//! over nonempty subsets `J` of the components, with the small-cardinality
//! conventions of `theta` held in a [`ConventionTable`].

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sha2::{Digest, Sha256};

use crate::conway::{coefficient_a, ConwayEngine};
use crate::error::{Error, Result};
use crate::linkalg::{
    det_exact, framed_matrix, restricted_from_matrix, signature_data, validate_subset, FramedLink,
    IntMatrix, SignatureData,
};

pub const DEFAULT_SUBSET_BUDGET: usize = 12;

/// `Lk_c` of a single component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingletonRule {
    Zero,
    One,
    Framing,
    NegFraming,
}

/// `Lk_c` of a pair of components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairRule {
    Zero,
    One,
    Linking,
    LinkingSquared,
    TwiceLinkingSquared,
}

/// The chain from `i` to `i` through no intermediate component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagonalChainRule {
    Zero,
    One,
    Framing,
}

/// The chain from `i` to `j != i` through no intermediate component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OffDiagonalChainRule {
    Zero,
    One,
    Linking,
}

/// Whether a Hamiltonian cycle on three or more components counts once or
/// once per direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CycleCount {
    Undirected,
    Directed,
}

impl SingletonRule {
    pub const ALL: [Self; 4] = [Self::Zero, Self::One, Self::Framing, Self::NegFraming];

    fn eval(self, framing: i128) -> i128 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
            Self::Framing => framing,
            Self::NegFraming => -framing,
        }
    }
}

impl PairRule {
    pub const ALL: [Self; 5] =
        [Self::Zero, Self::One, Self::Linking, Self::LinkingSquared, Self::TwiceLinkingSquared];

    fn eval(self, lk: i128) -> i128 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
            Self::Linking => lk,
            Self::LinkingSquared => lk * lk,
            Self::TwiceLinkingSquared => 2 * lk * lk,
        }
    }
}

impl DiagonalChainRule {
    pub const ALL: [Self; 3] = [Self::Zero, Self::One, Self::Framing];

    fn eval(self, framing: i128) -> i128 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
            Self::Framing => framing,
        }
    }
}

impl OffDiagonalChainRule {
    pub const ALL: [Self; 3] = [Self::Zero, Self::One, Self::Linking];

    fn eval(self, lk: i128) -> i128 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
            Self::Linking => lk,
        }
    }
}

impl CycleCount {
    pub const ALL: [Self; 2] = [Self::Undirected, Self::Directed];
}

/// Resolutions of the formula's unstated small cases. A `None` entry has not
/// been fixed; consulting it is an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConventionTable {
    pub empty_det_value: i64,
    pub singleton: Option<SingletonRule>,
    pub pair: Option<PairRule>,
    pub diagonal_chain: Option<DiagonalChainRule>,
    pub off_diagonal_chain: Option<OffDiagonalChainRule>,
    pub cycles: Option<CycleCount>,
    /// Which anchors fixed each entry.
    pub provenance: Vec<String>,
}

impl ConventionTable {
    pub fn unset() -> Self {
        Self {
            empty_det_value: 1,
            singleton: None,
            pair: None,
            diagonal_chain: None,
            off_diagonal_chain: None,
            cycles: None,
            provenance: Vec::new(),
        }
    }

    pub fn with_rules(
        singleton: SingletonRule,
        pair: PairRule,
        diagonal_chain: DiagonalChainRule,
        off_diagonal_chain: OffDiagonalChainRule,
        cycles: CycleCount,
    ) -> Self {
        Self {
            empty_det_value: 1,
            singleton: Some(singleton),
            pair: Some(pair),
            diagonal_chain: Some(diagonal_chain),
            off_diagonal_chain: Some(off_diagonal_chain),
            cycles: Some(cycles),
            provenance: Vec::new(),
        }
    }

    /// The table fixed by [`calibrate_conventions`] on [`standard_anchors`].
    pub fn standard() -> Self {
        let mut t = Self::with_rules(
            SingletonRule::Framing,
            PairRule::LinkingSquared,
            DiagonalChainRule::Framing,
            OffDiagonalChainRule::Linking,
            CycleCount::Directed,
        );
        t.provenance = vec!["calibrated on the standard anchor set".to_string()];
        t
    }

    /// Every table the calibration search considers.
    pub fn candidates() -> impl Iterator<Item = Self> {
        SingletonRule::ALL.into_iter().flat_map(|s| {
            PairRule::ALL.into_iter().flat_map(move |p| {
                DiagonalChainRule::ALL.into_iter().flat_map(move |d| {
                    OffDiagonalChainRule::ALL.into_iter().flat_map(move |o| {
                        CycleCount::ALL.into_iter().map(move |c| Self::with_rules(s, p, d, o, c))
                    })
                })
            })
        })
    }

    pub fn is_fixed(&self) -> bool {
        self.singleton.is_some()
            && self.pair.is_some()
            && self.diagonal_chain.is_some()
            && self.off_diagonal_chain.is_some()
            && self.cycles.is_some()
    }

    /// Canonical text of the rules, without provenance.
    pub fn rules_text(&self) -> String {
        format!(
            "empty_det={};singleton={:?};pair={:?};diagonal_chain={:?};off_diagonal_chain={:?};cycles={:?}",
            self.empty_det_value,
            self.singleton,
            self.pair,
            self.diagonal_chain,
            self.off_diagonal_chain,
            self.cycles
        )
    }

    /// SHA-256 of [`ConventionTable::rules_text`], in hex.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.rules_text().as_bytes());
        digest.iter().map(|b| format!("{:02x}", b)).collect()
    }

    /// Short identifier quoted in reports.
    pub fn version(&self) -> String {
        self.content_hash()[..16].to_string()
    }

    fn singleton_rule(&self) -> Result<SingletonRule> {
        self.singleton.ok_or_else(|| Error::ConventionNotFixed("Lk_c of one component".into()))
    }

    fn pair_rule(&self) -> Result<PairRule> {
        self.pair.ok_or_else(|| Error::ConventionNotFixed("Lk_c of two components".into()))
    }

    fn cycle_rule(&self) -> Result<CycleCount> {
        self.cycles.ok_or_else(|| Error::ConventionNotFixed("cycle orientation count".into()))
    }

    fn empty_chain(&self, i: usize, j: usize, e: &IntMatrix) -> Result<i128> {
        if i == j {
            let rule = self
                .diagonal_chain
                .ok_or_else(|| Error::ConventionNotFixed("empty chain from i to i".into()))?;
            Ok(rule.eval(e.get(i, i) as i128))
        } else {
            let rule = self
                .off_diagonal_chain
                .ok_or_else(|| Error::ConventionNotFixed("empty chain from i to j".into()))?;
            Ok(rule.eval(e.get(i, j) as i128))
        }
    }
}

impl fmt::Display for ConventionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.rules_text())
    }
}

fn ck(v: Option<i128>) -> Result<i128> {
    v.ok_or(Error::Overflow("theta sums"))
}

/// Product of linking numbers over the edges of a graph on the components.
pub fn lk_graph(link: &FramedLink, edges: &[(usize, usize)]) -> Result<BigInt> {
    let e = framed_matrix(link)?.0;
    let n = e.rows();
    let mut acc = BigInt::one();
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::ComponentOutOfRange { index: a.max(b), count: n });
        }
        if a == b {
            return Err(Error::SameComponent(a));
        }
        acc *= e.get(a, b);
    }
    Ok(acc)
}

/// Circular linking number of the sublink on `subset`, by enumerating
/// Hamiltonian cycles that start at the smallest vertex.
pub fn lk_circular(link: &FramedLink, subset: &[usize], conv: &ConventionTable) -> Result<BigInt> {
    let e = framed_matrix(link)?.0;
    let k = validate_subset(e.rows(), subset)?;
    Ok(lk_circular_enum(&e, &k, conv)?.into())
}

fn lk_circular_enum(e: &IntMatrix, k: &[usize], conv: &ConventionTable) -> Result<i128> {
    match k.len() {
        0 => Err(Error::InvalidSubset(Vec::new())),
        1 => Ok(conv.singleton_rule()?.eval(e.get(k[0], k[0]) as i128)),
        2 => Ok(conv.pair_rule()?.eval(e.get(k[0], k[1]) as i128)),
        _ => {
            let undirected = conv.cycle_rule()? == CycleCount::Undirected;
            let first = k[0];
            let mut total = 0i128;
            for_each_permutation(&k[1..], &mut |order| {
                if undirected && order[0] > order[order.len() - 1] {
                    return Ok(());
                }
                let mut prod = 1i128;
                let mut prev = first;
                for &v in order.iter().chain(core::iter::once(&first)) {
                    prod = ck(prod.checked_mul(e.get(prev, v) as i128))?;
                    prev = v;
                }
                total = ck(total.checked_add(prod))?;
                Ok(())
            })?;
            Ok(total)
        }
    }
}

/// Calls `f` on every ordering of `items`, in lexicographic order of positions.
fn for_each_permutation(items: &[usize], f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn rec(
        rest: &mut Vec<usize>,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> Result<()>,
    ) -> Result<()> {
        if rest.is_empty() {
            return f(cur);
        }
        for idx in 0..rest.len() {
            let v = rest.remove(idx);
            cur.push(v);
            rec(rest, cur, f)?;
            cur.pop();
            rest.insert(idx, v);
        }
        Ok(())
    }
    rec(&mut items.to_vec(), &mut Vec::new(), f)
}

/// `theta_b` of the sublink on `subset`, by direct enumeration of `K`, `(i, j)`
/// and the orderings of `subset \ K`.
pub fn theta_b(link: &FramedLink, subset: &[usize], conv: &ConventionTable) -> Result<BigInt> {
    let e = framed_matrix(link)?.0;
    let j = validate_subset(e.rows(), subset)?;
    Ok(theta_b_enum(&e, &j, conv)?.into())
}

fn theta_b_enum(e: &IntMatrix, j: &[usize], conv: &ConventionTable) -> Result<i128> {
    if j.is_empty() {
        return Err(Error::InvalidSubset(Vec::new()));
    }
    let mut total = 0i128;
    for mask in 1u32..(1 << j.len()) {
        let k: Vec<usize> = (0..j.len()).filter(|b| mask >> b & 1 == 1).map(|b| j[b]).collect();
        let rest: Vec<usize> = (0..j.len()).filter(|b| mask >> b & 1 == 0).map(|b| j[b]).collect();
        let c = lk_circular_enum(e, &k, conv)?;
        if c == 0 {
            continue;
        }
        let mut chains = 0i128;
        for &a in &k {
            for &b in &k {
                if rest.is_empty() {
                    chains = ck(chains.checked_add(conv.empty_chain(a, b, e)?))?;
                    continue;
                }
                for_each_permutation(&rest, &mut |g| {
                    let mut prod = e.get(a, g[0]) as i128;
                    for w in g.windows(2) {
                        prod = ck(prod.checked_mul(e.get(w[0], w[1]) as i128))?;
                    }
                    prod = ck(prod.checked_mul(e.get(g[g.len() - 1], b) as i128))?;
                    chains = ck(chains.checked_add(prod))?;
                    Ok(())
                })?;
            }
        }
        total = ck(total.checked_add(ck(c.checked_mul(chains))?))?;
    }
    Ok(total)
}

/// `theta`: `theta_b + 2` on one component, `theta_b - 2 l_ij` on two, `theta_b` otherwise.
pub fn theta(link: &FramedLink, subset: &[usize], conv: &ConventionTable) -> Result<BigInt> {
    let e = framed_matrix(link)?.0;
    let j = validate_subset(e.rows(), subset)?;
    let tb = theta_b_enum(&e, &j, conv)?;
    Ok(theta_adjust(&e, &j, tb).into())
}

fn theta_adjust(e: &IntMatrix, j: &[usize], tb: i128) -> i128 {
    match j.len() {
        1 => tb + 2,
        2 => tb - 2 * e.get(j[0], j[1]) as i128,
        _ => tb,
    }
}

/// The per-link data of the formula that does not depend on conventions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LescopInputs {
    matrix: IntMatrix,
    signature: SignatureData,
    /// `a_1` of the sublink on each nonempty bitmask, indexed by mask.
    a1: Vec<BigInt>,
    /// `det E(L_{N\J}; J)` and `det E(L_{N\J})` per mask.
    det_restricted: Vec<BigInt>,
    det_complement: Vec<BigInt>,
}

impl LescopInputs {
    pub fn new(link: &FramedLink, engine: &mut ConwayEngine, subset_budget: usize) -> Result<Self> {
        let n = link.component_count();
        let mut a1 = vec![BigInt::zero(); 1 << n];
        if n > subset_budget {
            return Err(Error::SubsetBudget { components: n, budget: subset_budget });
        }
        for (mask, slot) in a1.iter_mut().enumerate().skip(1) {
            let members = mask_members(mask, n);
            let sub = link.diagram().sublink(&members)?;
            let poly = engine.conway(&sub)?;
            *slot = coefficient_a(&poly, members.len(), 1)?;
        }
        Self::from_parts(framed_matrix(link)?.0, a1)
    }

    /// Builds inputs from a framed linking matrix and `a_1` per bitmask
    /// (entry 0 is ignored).
    pub fn from_parts(matrix: IntMatrix, a1: Vec<BigInt>) -> Result<Self> {
        let n = matrix.require_symmetric()?;
        if a1.len() != 1 << n {
            return Err(Error::InvalidSubset(Vec::new()));
        }
        let signature = signature_data(&matrix)?;
        let mut det_restricted = vec![BigInt::zero(); 1 << n];
        let mut det_complement = vec![BigInt::zero(); 1 << n];
        for mask in 1..1usize << n {
            let inside = mask_members(mask, n);
            let outside: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 0).collect();
            det_restricted[mask] = det_exact(&restricted_from_matrix(&matrix, &inside)?)?;
            det_complement[mask] = det_exact(&matrix.principal(&outside))?;
        }
        Ok(Self { matrix, signature, a1, det_restricted, det_complement })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn signature(&self) -> &SignatureData {
        &self.signature
    }

    pub fn component_count(&self) -> usize {
        self.matrix.rows()
    }

    pub fn a1(&self, members: &[usize]) -> BigInt {
        self.a1[members.iter().map(|&i| 1usize << i).sum::<usize>()].clone()
    }

    /// Sum of framings, used by the calibration fallback.
    fn framing_sum(&self) -> i64 {
        (0..self.component_count()).map(|i| self.matrix.get(i, i)).sum()
    }

    /// `theta_b` for every nonempty mask, by dynamic programming over
    /// Hamiltonian paths.
    pub fn theta_b_all(&self, conv: &ConventionTable) -> Result<Vec<i128>> {
        let n = self.component_count();
        let size = 1usize << n;
        let l = |i: usize, j: usize| self.matrix.get(i, j) as i128;
        // paths[s][u][v]: sum over Hamiltonian paths of s from u to v
        let mut paths = vec![vec![0i128; n * n]; size];
        for (mask, table) in paths.iter_mut().enumerate().skip(1) {
            if mask.count_ones() == 1 {
                let u = mask.trailing_zeros() as usize;
                table[u * n + u] = 1;
            }
        }
        for mask in 1..size {
            if mask.count_ones() < 2 {
                continue;
            }
            let mut table = vec![0i128; n * n];
            for v in (0..n).filter(|&v| mask >> v & 1 == 1) {
                let prev = &paths[mask & !(1 << v)];
                for u in (0..n).filter(|&u| u != v && mask >> u & 1 == 1) {
                    let mut acc = 0i128;
                    for w in (0..n).filter(|&w| w != v && mask >> w & 1 == 1) {
                        let p = prev[u * n + w];
                        if p != 0 {
                            acc = ck(acc.checked_add(ck(p.checked_mul(l(w, v)))?))?;
                        }
                    }
                    table[u * n + v] = acc;
                }
            }
            paths[mask] = table;
        }
        // chain[r][i][j]: sum over orderings g of r of l_{i g1} ... l_{gk j}, i, j outside r
        let mut chain = vec![vec![0i128; n * n]; size];
        for r in 1..size {
            let members = mask_members(r, n);
            let mut into = vec![0i128; n * n];
            for i in (0..n).filter(|&i| r >> i & 1 == 0) {
                for &v in &members {
                    let mut acc = 0i128;
                    for &u in &members {
                        let p = paths[r][u * n + v];
                        if p != 0 {
                            acc = ck(acc.checked_add(ck(l(i, u).checked_mul(p))?))?;
                        }
                    }
                    into[i * n + v] = acc;
                }
            }
            for i in (0..n).filter(|&i| r >> i & 1 == 0) {
                for j in (0..n).filter(|&j| r >> j & 1 == 0) {
                    let mut acc = 0i128;
                    for &v in &members {
                        acc = ck(acc.checked_add(ck(into[i * n + v].checked_mul(l(v, j)))?))?;
                    }
                    chain[r][i * n + j] = acc;
                }
            }
        }
        let mut circular = vec![0i128; size];
        for (k, slot) in circular.iter_mut().enumerate().skip(1) {
            let members = mask_members(k, n);
            *slot = match members.len() {
                1 | 2 => lk_circular_enum(&self.matrix, &members, conv)?,
                _ => {
                    let m = members[0];
                    let mut directed = 0i128;
                    for &v in &members[1..] {
                        let p = paths[k][m * n + v];
                        directed = ck(directed.checked_add(ck(p.checked_mul(l(v, m)))?))?;
                    }
                    match conv.cycle_rule()? {
                        CycleCount::Directed => directed,
                        CycleCount::Undirected => directed / 2,
                    }
                }
            };
        }
        let mut out = vec![0i128; size];
        for (j, slot) in out.iter_mut().enumerate().skip(1) {
            let mut total = 0i128;
            // nonempty submasks k of j
            let mut k = j;
            while k > 0 {
                let c = circular[k];
                if c != 0 {
                    let r = j & !k;
                    let members = mask_members(k, n);
                    let mut chains = 0i128;
                    for &a in &members {
                        for &b in &members {
                            let v = if r == 0 {
                                conv.empty_chain(a, b, &self.matrix)?
                            } else {
                                chain[r][a * n + b]
                            };
                            chains = ck(chains.checked_add(v))?;
                        }
                    }
                    total = ck(total.checked_add(ck(c.checked_mul(chains))?))?;
                }
                k = (k - 1) & j;
            }
            *slot = total;
        }
        Ok(out)
    }

    pub fn evaluate(&self, conv: &ConventionTable) -> Result<LescopReport> {
        if !conv.is_fixed() {
            return Err(Error::ConventionNotFixed(format!("table {}", conv.rules_text())));
        }
        let n = self.component_count();
        let thetas = self.theta_b_all(conv)?;
        let sign = BigInt::from(self.signature.sign_l);
        let mut d1 = BigRational::zero();
        let mut d2 = BigRational::zero();
        let mut per_subset = Vec::with_capacity((1 << n) - 1);
        for mask in 1..1usize << n {
            let members = mask_members(mask, n);
            let theta = theta_adjust(&self.matrix, &members, thetas[mask]);
            let a1 = self.a1[mask].clone();
            let parity = if members.len().is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
            // The surgery formula reads `a_1` off `z -> -z`, which flips it on
            // even sublinks; blow-downs of `|lk| >= 2` links pin this down.
            let d1_term = BigRational::from_integer(&sign * &self.det_restricted[mask] * &a1 * -&parity);
            let d2_term = BigRational::new(
                &sign * &self.det_complement[mask] * parity * BigInt::from(theta),
                BigInt::from(24),
            );
            d1 += &d1_term;
            d2 += &d2_term;
            per_subset.push(SubsetTerm {
                subset: members,
                det_restricted: self.det_restricted[mask].clone(),
                a1,
                det_complement: self.det_complement[mask].clone(),
                theta: BigInt::from(theta),
                d1_term,
                d2_term,
            });
        }
        let sig_term = BigRational::new(
            &self.signature.h1_order * BigInt::from(self.signature.sig),
            BigInt::from(8),
        );
        let lambda = &d1 + &d2 + &sig_term;
        Ok(LescopReport {
            lambda,
            d1,
            d2,
            sig_term,
            per_subset,
            sign_l: self.signature.sign_l,
            sig: self.signature.sig,
            det: self.signature.det.clone(),
            h1_order: self.signature.h1_order.clone(),
            conventions_version: conv.version(),
        })
    }
}

fn mask_members(mask: usize, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

/// One subset's contribution to the two subset sums, signs included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTerm {
    pub subset: Vec<usize>,
    pub det_restricted: BigInt,
    pub a1: BigInt,
    pub det_complement: BigInt,
    pub theta: BigInt,
    pub d1_term: BigRational,
    pub d2_term: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LescopReport {
    pub lambda: BigRational,
    pub d1: BigRational,
    pub d2: BigRational,
    pub sig_term: BigRational,
    /// Subsets in increasing bitmask order.
    pub per_subset: Vec<SubsetTerm>,
    pub sign_l: i64,
    pub sig: i64,
    pub det: BigInt,
    pub h1_order: BigInt,
    pub conventions_version: String,
}

impl LescopReport {
    /// `12 lambda` when it is an integer.
    pub fn twelve_lambda(&self) -> Option<BigInt> {
        let t = &self.lambda * BigRational::from_integer(BigInt::from(12));
        t.is_integer().then(|| t.to_integer())
    }

    /// Re-sums the per-subset terms and checks them against the totals.
    pub fn audit(&self) -> bool {
        let d1: BigRational = self.per_subset.iter().map(|t| &t.d1_term).sum();
        let d2: BigRational = self.per_subset.iter().map(|t| &t.d2_term).sum();
        d1 == self.d1 && d2 == self.d2 && self.lambda == &self.d1 + &self.d2 + &self.sig_term
    }
}

pub fn lescop_lambda(link: &FramedLink, conv: &ConventionTable) -> Result<LescopReport> {
    lescop_lambda_with(link, conv, &mut ConwayEngine::default(), DEFAULT_SUBSET_BUDGET)
}

pub fn lescop_lambda_with(
    link: &FramedLink,
    conv: &ConventionTable,
    engine: &mut ConwayEngine,
    subset_budget: usize,
) -> Result<LescopReport> {
    if !conv.is_fixed() {
        return Err(Error::ConventionNotFixed(format!("table {}", conv.rules_text())));
    }
    LescopInputs::new(link, engine, subset_budget)?.evaluate(conv)
}

/// A framed link with the invariant its surgery manifold is known to have.
#[derive(Clone, Debug)]
pub struct Anchor {
    pub label: String,
    pub link: FramedLink,
    pub expected: BigRational,
}

impl Anchor {
    pub fn new(label: &str, link: FramedLink, num: i64, den: i64) -> Self {
        Self {
            label: label.to_string(),
            link,
            expected: BigRational::new(num.into(), den.into()),
        }
    }
}

/// Outcome of a calibration: the table, and whether the fallback correction was needed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Calibration {
    pub table: ConventionTable,
    /// `(alpha, beta)` of a correction `sum_i (alpha + beta f_i) / 24`, when used.
    pub correction: Option<(i64, i64)>,
}

/// Range searched for the fallback correction coefficients.
pub const CORRECTION_RANGE: i64 = 24;

/// Finds the unique candidate table reproducing every anchor. When no table
/// does, searches a per-component correction `(alpha + beta * framing) / 24`
/// added to every candidate; that fallback must also be unique.
pub fn calibrate_conventions(anchors: &[Anchor]) -> Result<Calibration> {
    if anchors.is_empty() {
        return Err(Error::Calibration("no constraints".into()));
    }
    for (x, a) in anchors.iter().enumerate() {
        for b in &anchors[x + 1..] {
            if a.link == b.link && a.expected != b.expected {
                return Err(Error::Calibration(format!(
                    "contradictory anchors: `{}` expects {} but `{}` expects {} for the same framed link",
                    a.label, a.expected, b.label, b.expected
                )));
            }
        }
    }
    let mut engine = ConwayEngine::default();
    let inputs: Vec<LescopInputs> = anchors
        .iter()
        .map(|a| LescopInputs::new(&a.link, &mut engine, DEFAULT_SUBSET_BUDGET))
        .collect::<Result<_>>()?;
    let tables: Vec<ConventionTable> = ConventionTable::candidates().collect();
    let mut values: Vec<Vec<BigRational>> = Vec::with_capacity(tables.len());
    for t in &tables {
        let row = inputs.iter().map(|i| Ok(i.evaluate(t)?.lambda)).collect::<Result<Vec<_>>>()?;
        values.push(row);
    }
    let survivors: Vec<usize> = (0..tables.len())
        .filter(|&t| values[t].iter().zip(anchors).all(|(v, a)| *v == a.expected))
        .collect();
    match survivors.len() {
        1 => {
            let mut table = tables[survivors[0]].clone();
            table.provenance = provenance(anchors);
            return Ok(Calibration { table, correction: None });
        }
        0 => {}
        _ => {
            let listed: Vec<String> = survivors.iter().map(|&t| tables[t].rules_text()).collect();
            return Err(Error::Calibration(format!(
                "{} tables satisfy every anchor: {}",
                survivors.len(),
                listed.join(" | ")
            )));
        }
    }
    // fallback: lambda + sum_i (alpha + beta f_i) / 24
    let stats: Vec<(i64, i64)> =
        inputs.iter().map(|i| (i.component_count() as i64, i.framing_sum())).collect();
    let mut fixes = Vec::new();
    for (t, row) in values.iter().enumerate() {
        for alpha in -CORRECTION_RANGE..=CORRECTION_RANGE {
            for beta in -CORRECTION_RANGE..=CORRECTION_RANGE {
                let ok = row.iter().zip(anchors).zip(&stats).all(|((v, a), &(n, fsum))| {
                    let corr = BigRational::new((alpha * n + beta * fsum).into(), 24.into());
                    v + corr == a.expected
                });
                if ok {
                    fixes.push((t, alpha, beta));
                }
            }
        }
    }
    let nontrivial: Vec<&(usize, i64, i64)> = fixes.iter().filter(|f| f.1 != 0 || f.2 != 0).collect();
    if nontrivial.len() == 1 {
        let &(t, alpha, beta) = nontrivial[0];
        let mut table = tables[t].clone();
        table.provenance = provenance(anchors);
        table.provenance.push(format!("framing-linear correction alpha={} beta={}", alpha, beta));
        return Ok(Calibration { table, correction: Some((alpha, beta)) });
    }
    Err(Error::Calibration(diagnose(anchors, &tables, &values, nontrivial.len())))
}

fn provenance(anchors: &[Anchor]) -> Vec<String> {
    let labels: Vec<&str> = anchors.iter().map(|a| a.label.as_str()).collect();
    vec![format!("unique table reproducing anchors: {}", labels.join(", "))]
}

/// Explains a failed search: which anchors no table meets, and which anchors
/// the best tables still miss.
fn diagnose(
    anchors: &[Anchor],
    tables: &[ConventionTable],
    values: &[Vec<BigRational>],
    corrections: usize,
) -> String {
    let mut lines = Vec::new();
    let mut met_by = vec![0usize; anchors.len()];
    for row in values {
        for (x, (v, a)) in row.iter().zip(anchors).enumerate() {
            if *v == a.expected {
                met_by[x] += 1;
            }
        }
    }
    for (x, a) in anchors.iter().enumerate() {
        if met_by[x] == 0 {
            let mut seen: BTreeMap<String, ()> = BTreeMap::new();
            for row in values {
                seen.insert(row[x].to_string(), ());
            }
            let vals: Vec<String> = seen.into_keys().collect();
            lines.push(format!(
                "anchor `{}` expects {} but every table gives one of [{}]",
                a.label,
                a.expected,
                vals.join(", ")
            ));
        }
    }
    let best = values
        .iter()
        .map(|row| row.iter().zip(anchors).filter(|(v, a)| **v == a.expected).count())
        .max()
        .unwrap_or(0);
    for (t, row) in values.iter().enumerate() {
        let hits = row.iter().zip(anchors).filter(|(v, a)| **v == a.expected).count();
        if hits == best {
            let missed: Vec<String> = row
                .iter()
                .zip(anchors)
                .filter(|(v, a)| **v != a.expected)
                .map(|(v, a)| format!("`{}` gives {} not {}", a.label, v, a.expected))
                .collect();
            lines.push(format!("closest table {} misses: {}", tables[t].rules_text(), missed.join("; ")));
        }
    }
    lines.push(format!(
        "no table satisfies all {} anchors; framing-linear corrections within +-{} found {} candidates",
        anchors.len(),
        CORRECTION_RANGE,
        corrections
    ));
    lines.join("\n")
}

/// Anchors with known invariants: S^3 as `+-1` unknots and as a Hopf link
/// with a 0-framed component, `S^1 x S^2`, `RP^3`, `T^3`, Casson's surgery
/// formula on the trefoil and the figure-eight, and blow-downs of the
/// (3,3) torus link.
pub fn standard_anchors() -> Vec<Anchor> {
    use crate::fixtures as fx;
    vec![
        Anchor::new("unknot +1 (S^3)", fx::unknot(1), 0, 1),
        Anchor::new("unknot -1 (S^3)", fx::unknot(-1), 0, 1),
        Anchor::new("unknot 0 (S^1 x S^2)", fx::unknot(0), -1, 12),
        Anchor::new("Borromean 0,0,0 (T^3)", fx::borromean([0, 0, 0]), 1, 1),
        Anchor::new("trefoil +1", fx::trefoil(1), 1, 1),
        Anchor::new("trefoil -1", fx::trefoil(-1), -1, 1),
        Anchor::new("figure-eight +1", fx::figure_eight(1), -1, 1),
        Anchor::new("figure-eight -1", fx::figure_eight(-1), 1, 1),
        Anchor::new("Hopf 1,1 (S^1 x S^2)", fx::hopf(1, [1, 1]), -1, 12),
        Anchor::new("Hopf 3,0 (S^3)", fx::hopf(1, [3, 0]), 0, 1),
        Anchor::new("Hopf 1,-1 (RP^3)", fx::hopf(1, [1, -1]), 0, 1),
        Anchor::new("negative Hopf 1,1 (S^1 x S^2)", fx::hopf(-1, [1, 1]), -1, 12),
        Anchor::new("negative Hopf 3,0 (S^3)", fx::hopf(-1, [3, 0]), 0, 1),
        Anchor::new("chain 0,1,0 (S^1 x S^2)", fx::chain3([0, 1, 0]), -1, 12),
        Anchor::new("torus(3,3) 2,2,1 (S^3)", fx::torus33([2, 2, 1]), 0, 1),
        Anchor::new("torus(3,3) 1,2,1 (S^1 x S^2)", fx::torus33([1, 2, 1]), -1, 12),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures as fx;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn lambda(link: &FramedLink) -> BigRational {
        lescop_lambda(link, &ConventionTable::standard()).unwrap().lambda
    }

    #[test]
    fn lk_graph_examples() {
        let hopf = fx::hopf(1, [0, 0]);
        assert_eq!(lk_graph(&hopf, &[(0, 1)]).unwrap(), 1.into());
        let chain = fx::chain3([0, 0, 0]);
        assert_eq!(lk_graph(&chain, &[(0, 1), (1, 2), (2, 0)]).unwrap(), 0.into());
        assert_eq!(lk_graph(&chain, &[]).unwrap(), 1.into());
        assert!(lk_graph(&chain, &[(1, 1)]).is_err());
    }

    #[test]
    fn lk_circular_examples() {
        let conv = ConventionTable::standard();
        let borromean = fx::borromean([0, 0, 0]);
        assert_eq!(lk_circular(&borromean, &[0, 1, 2], &conv).unwrap(), 0.into());
        let t33 = fx::torus33([0, 0, 0]);
        assert_eq!(lk_circular(&t33, &[0, 1, 2], &conv).unwrap(), 2.into());
        let mut undirected = conv.clone();
        undirected.cycles = Some(CycleCount::Undirected);
        assert_eq!(lk_circular(&t33, &[0, 1, 2], &undirected).unwrap(), 1.into());
        let chain = fx::chain3([0, 0, 0]);
        assert_eq!(lk_circular(&chain, &[0, 1, 2], &conv).unwrap(), 0.into());
        assert!(matches!(
            lk_circular(&chain, &[0], &ConventionTable::unset()),
            Err(Error::ConventionNotFixed(_))
        ));
    }

    #[test]
    fn theta_examples() {
        let conv = ConventionTable::standard();
        let unlink = fx::unlink(&[0, 0]);
        assert_eq!(theta_b(&unlink, &[0, 1], &conv).unwrap(), 0.into());
        let borromean = fx::borromean([0, 0, 0]);
        assert_eq!(theta_b(&borromean, &[0, 1, 2], &conv).unwrap(), 0.into());
        let unknot = fx::unknot(3);
        let tb = theta_b(&unknot, &[0], &conv).unwrap();
        assert_eq!(theta(&unknot, &[0], &conv).unwrap(), tb + 2);
        let chain = fx::chain3([1, 2, 3]);
        assert_eq!(
            theta(&chain, &[0, 2], &conv).unwrap(),
            theta_b(&chain, &[0, 2], &conv).unwrap()
        );
        assert_eq!(
            theta(&chain, &[0, 1, 2], &conv).unwrap(),
            theta_b(&chain, &[0, 1, 2], &conv).unwrap()
        );
        assert!(theta_b(&chain, &[0], &ConventionTable::unset()).is_err());
    }

    #[test]
    fn dynamic_program_matches_enumeration() {
        for conv in ConventionTable::candidates().step_by(7) {
            for link in [fx::torus33([1, -2, 3]), fx::chain3([2, -1, 0]), fx::hopf(1, [2, 5])] {
                let inputs = LescopInputs::new(&link, &mut ConwayEngine::default(), 12).unwrap();
                let dp = inputs.theta_b_all(&conv).unwrap();
                let n = link.component_count();
                for mask in 1..1usize << n {
                    let members = mask_members(mask, n);
                    assert_eq!(BigInt::from(dp[mask]), theta_b(&link, &members, &conv).unwrap());
                }
            }
        }
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda(&fx::borromean([0, 0, 0])), q(1, 1));
        assert_eq!(lambda(&fx::unknot(1)), q(0, 1));
        assert_eq!(lambda(&fx::unknot(-1)), q(0, 1));
        assert_eq!(lambda(&fx::trefoil(1)), q(1, 1));
        assert_eq!(lambda(&fx::trefoil(-1)), q(-1, 1));
        assert_eq!(lambda(&fx::figure_eight(1)), q(-1, 1));
        assert_eq!(lambda(&fx::figure_eight(-1)), q(1, 1));
    }

    #[test]
    fn zero_framed_unknot_is_minus_one_twelfth() {
        assert_eq!(lambda(&fx::unknot(0)), q(-1, 12));
    }

    #[test]
    fn report_is_consistent() {
        let r = lescop_lambda(&fx::torus33([1, 2, -1]), &ConventionTable::standard()).unwrap();
        assert!(r.audit());
        assert!(r.twelve_lambda().is_some());
        assert_eq!(r.per_subset.len(), 7);
        assert_eq!(r.conventions_version, ConventionTable::standard().version());
    }

    #[test]
    fn unfixed_table_is_rejected() {
        assert!(matches!(
            lescop_lambda(&fx::unknot(1), &ConventionTable::unset()),
            Err(Error::ConventionNotFixed(_))
        ));
    }

    #[test]
    fn subset_budget() {
        let link = fx::unlink(&[0; 4]);
        assert_eq!(
            lescop_lambda_with(&link, &ConventionTable::standard(), &mut ConwayEngine::default(), 3),
            Err(Error::SubsetBudget { components: 4, budget: 3 })
        );
    }

    #[test]
    fn standard_calibration_is_unique() {
        let cal = calibrate_conventions(&standard_anchors()).unwrap();
        assert_eq!(cal.correction, None);
        assert_eq!(cal.table.rules_text(), ConventionTable::standard().rules_text());
    }

    #[test]
    fn calibration_errors() {
        assert_eq!(calibrate_conventions(&[]), Err(Error::Calibration("no constraints".into())));
        let clash = [
            Anchor::new("unknot +1", fx::unknot(1), 0, 1),
            Anchor::new("unknot +1 again", fx::unknot(1), 1, 1),
        ];
        match calibrate_conventions(&clash) {
            Err(Error::Calibration(msg)) => {
                assert!(msg.contains("unknot +1 again"));
                assert!(msg.contains("contradictory"));
            }
            other => panic!("unexpected {:?}", other),
        }
    }

    #[test]
    fn hash_tracks_rules_only() {
        let a = ConventionTable::standard();
        let mut b = a.clone();
        b.provenance.push("note".into());
        assert_eq!(a.content_hash(), b.content_hash());
        b.cycles = Some(CycleCount::Undirected);
        assert_ne!(a.content_hash(), b.content_hash());
        assert_eq!(a.content_hash().len(), 64);
    }
}
