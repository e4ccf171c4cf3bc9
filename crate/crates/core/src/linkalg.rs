//! Exact linear algebra over linking data.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn square(n: usize) -> Self {
        Self::zeros(n, n)
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::NotSquare { rows: r, cols: bad.len() });
        }
        Ok(Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[i64]>::to_vec).collect()
    }

    pub fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    pub fn require_symmetric(&self) -> Result<usize> {
        let n = self.require_square()?;
        for i in 0..n {
            for j in i + 1..n {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(n)
    }

    /// Rows and columns restricted to `keep` (in the given order).
    pub fn principal(&self, keep: &[usize]) -> Self {
        let mut out = Self::square(keep.len());
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }

    /// The matrix with row `r` and column `c` deleted.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut out = Self::zeros(self.rows - 1, self.cols - 1);
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                out.set(i - (i > r) as usize, j - (j > c) as usize, self.get(i, j));
            }
        }
        out
    }
}

/// A diagram with an integral surgery coefficient on each component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedLink {
    diagram: LinkDiagram,
    framings: Vec<i64>,
}

impl FramedLink {
    pub fn new(diagram: LinkDiagram, framings: Vec<i64>) -> Result<Self> {
        if framings.len() != diagram.component_count() {
            return Err(Error::FramingCount {
                expected: diagram.component_count(),
                got: framings.len(),
            });
        }
        Ok(Self { diagram, framings })
    }

    pub fn diagram(&self) -> &LinkDiagram {
        &self.diagram
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn component_count(&self) -> usize {
        self.framings.len()
    }
}

/// Linking numbers off the diagonal, framings on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FramedMatrix(pub IntMatrix);

/// Linking numbers off the diagonal, minus the row's off-diagonal sum on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HosteMatrix(pub IntMatrix);

impl FramedMatrix {
    pub fn size(&self) -> usize {
        self.0.rows()
    }
}

impl HosteMatrix {
    pub fn size(&self) -> usize {
        self.0.rows()
    }
}

pub fn linking_number(d: &LinkDiagram, i: usize, j: usize) -> Result<i64> {
    let n = d.component_count();
    for c in [i, j] {
        if c >= n {
            return Err(Error::ComponentOutOfRange { index: c, count: n });
        }
    }
    if i == j {
        return Err(Error::SameComponent(i));
    }
    Ok(d.linking_numbers()?[i][j])
}

pub fn framed_matrix(link: &FramedLink) -> Result<FramedMatrix> {
    let lk = link.diagram.linking_numbers()?;
    let mut rows = lk;
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = link.framings[i];
    }
    Ok(FramedMatrix(IntMatrix::from_rows(rows)?))
}

pub fn hoste_matrix(d: &LinkDiagram) -> Result<HosteMatrix> {
    let mut rows = d.linking_numbers()?;
    for (i, row) in rows.iter_mut().enumerate() {
        let off: i64 = row.iter().sum();
        row[i] = -off;
    }
    if rows.is_empty() {
        return Ok(HosteMatrix(IntMatrix::square(0)));
    }
    Ok(HosteMatrix(IntMatrix::from_rows(rows)?))
}

/// The common cofactor of the Hoste matrix, signed to match the lowest
/// Conway coefficient: `(-1)^(n-1)` times the raw `(0,0)` cofactor.
pub fn a0_cofactor(m: &HosteMatrix) -> Result<BigInt> {
    let n = m.0.require_square()?;
    if n == 0 {
        return Err(Error::TooFewComponents { needed: 1, got: 0 });
    }
    let raw = det_exact(&m.0.minor(0, 0))?;
    Ok(if n % 2 == 0 { -raw } else { raw })
}

/// Fraction-free (Bareiss) determinant. The empty matrix has determinant 1.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    let n = m.require_square()?;
    let mut a: Vec<Vec<BigInt>> =
        (0..n).map(|i| (0..n).map(|j| BigInt::from(m.get(i, j))).collect()).collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { BigInt::one() } else { a[n - 1][n - 1].clone() };
    Ok(if negate { -det } else { det })
}

/// Inertia, determinant and homology order of a symmetric surgery matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignatureData {
    pub b_minus: usize,
    pub b_plus: usize,
    pub b_zero: usize,
    pub sig: i64,
    /// `(-1)^b_minus`.
    pub sign_l: i64,
    pub det: BigInt,
    /// `|det|`, or 0 when the determinant vanishes (infinite first homology).
    pub h1_order: BigInt,
}

/// Exact inertia by symmetric congruence reduction over the rationals.
pub fn signature_data(m: &IntMatrix) -> Result<SignatureData> {
    let n = m.require_symmetric()?;
    let mut a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(m.get(i, j).into())).collect())
        .collect();
    let (mut b_plus, mut b_minus) = (0usize, 0usize);
    let mut k = 0;
    while k < n {
        let pivot = (k..n).find(|&i| !a[i][i].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                // zero diagonal: fold a row with an off-diagonal entry into another
                let pair = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                i
            }
        };
        a.swap(k, pivot);
        for row in a.iter_mut() {
            row.swap(k, pivot);
        }
        let d = a[k][k].clone();
        if d.is_positive() {
            b_plus += 1;
        } else {
            b_minus += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
        for i in k + 1..n {
            a[k][i] = BigRational::zero();
        }
        k += 1;
    }
    let det = det_exact(m)?;
    let h1_order = det.abs();
    Ok(SignatureData {
        b_minus,
        b_plus,
        b_zero: n - b_plus - b_minus,
        sig: b_plus as i64 - b_minus as i64,
        sign_l: if b_minus % 2 == 0 { 1 } else { -1 },
        det,
        h1_order,
    })
}

/// Sorted, duplicate-free subset of `0..n`.
pub fn validate_subset(n: usize, subset: &[usize]) -> Result<Vec<usize>> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    let dup = s.windows(2).any(|w| w[0] == w[1]);
    if dup || s.last().is_some_and(|&m| m >= n) {
        return Err(Error::InvalidSubset(subset.to_vec()));
    }
    Ok(s)
}

/// `E(L_{N\I}; I)`: rows and columns outside `I`, with diagonal entries
/// `l_ii + sum_{k in I} l_ik`.
pub fn restricted_matrix(link: &FramedLink, subset: &[usize]) -> Result<IntMatrix> {
    let e = framed_matrix(link)?.0;
    restricted_from_matrix(&e, subset)
}

pub fn restricted_from_matrix(e: &IntMatrix, subset: &[usize]) -> Result<IntMatrix> {
    let n = e.require_square()?;
    let inside = validate_subset(n, subset)?;
    let rest: Vec<usize> = (0..n).filter(|i| inside.binary_search(i).is_err()).collect();
    let mut out = e.principal(&rest);
    for (a, &i) in rest.iter().enumerate() {
        let extra: i64 = inside.iter().map(|&k| e.get(i, k)).sum();
        out.set(a, a, e.get(i, i) + extra);
    }
    Ok(out)
}

pub fn sublink_matrix(link: &FramedLink, subset: &[usize]) -> Result<FramedMatrix> {
    let e = framed_matrix(link)?.0;
    let s = validate_subset(e.rows(), subset)?;
    Ok(FramedMatrix(e.principal(&s)))
}

/// Row sums vanish on every Hoste matrix.
pub fn rows_sum_to_zero(m: &IntMatrix) -> bool {
    m.to_rows().iter().all(|r| r.iter().sum::<i64>() == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{braid_closure, BraidWord};

    fn closure(k: usize, w: &[i32]) -> LinkDiagram {
        braid_closure(&BraidWord::new(k, w.to_vec()).unwrap())
    }

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn linking_number_examples() {
        assert_eq!(linking_number(&closure(2, &[1, 1]), 0, 1).unwrap(), 1);
        assert_eq!(linking_number(&closure(2, &[]), 0, 1).unwrap(), 0);
        assert_eq!(linking_number(&closure(2, &[1, 1, 1, 1]), 0, 1).unwrap(), 2);
        assert_eq!(linking_number(&closure(2, &[1, 1]), 1, 1), Err(Error::SameComponent(1)));
    }

    #[test]
    fn framed_and_hoste_examples() {
        let unknot = FramedLink::new(closure(1, &[]), vec![1]).unwrap();
        assert_eq!(framed_matrix(&unknot).unwrap().0, m(&[&[1]]));
        let hopf = FramedLink::new(closure(2, &[1, 1]), vec![0, 0]).unwrap();
        assert_eq!(framed_matrix(&hopf).unwrap().0, m(&[&[0, 1], &[1, 0]]));
        let borromean = FramedLink::new(closure(3, &[1, -2, 1, -2, 1, -2]), vec![0, 0, 0]).unwrap();
        assert_eq!(framed_matrix(&borromean).unwrap().0, IntMatrix::square(3));
        assert_eq!(hoste_matrix(&closure(2, &[1, 1])).unwrap().0, m(&[&[-1, 1], &[1, -1]]));
        assert_eq!(hoste_matrix(&closure(2, &[1, 1, 1])).unwrap().0, m(&[&[0]]));
        let chain = hoste_matrix(&closure(3, &[1, 1, 2, 2])).unwrap().0;
        assert_eq!(chain, m(&[&[-1, 1, 0], &[1, -2, 1], &[0, 1, -1]]));
        assert!(FramedLink::new(closure(2, &[1, 1]), vec![0]).is_err());
    }

    #[test]
    fn a0_examples() {
        assert_eq!(a0_cofactor(&hoste_matrix(&closure(2, &[1, 1, 1])).unwrap()).unwrap(), 1.into());
        assert_eq!(a0_cofactor(&hoste_matrix(&closure(2, &[1, 1])).unwrap()).unwrap(), 1.into());
        assert_eq!(a0_cofactor(&hoste_matrix(&closure(2, &[])).unwrap()).unwrap(), 0.into());
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_exact(&IntMatrix::square(0)).unwrap(), 1.into());
        assert_eq!(det_exact(&m(&[&[1]])).unwrap(), 1.into());
        assert_eq!(det_exact(&m(&[&[0, 1], &[1, 0]])).unwrap(), (-1).into());
        assert_eq!(det_exact(&m(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]])).unwrap(), 4.into());
        assert!(matches!(det_exact(&IntMatrix::zeros(1, 2)), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn signature_examples() {
        let s = signature_data(&m(&[&[1]])).unwrap();
        assert_eq!((s.b_minus, s.sig, s.sign_l), (0, 1, 1));
        assert_eq!((s.det.clone(), s.h1_order.clone()), (1.into(), 1.into()));
        let s = signature_data(&m(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!((s.b_minus, s.sig, s.sign_l), (1, 0, -1));
        assert_eq!((s.det.clone(), s.h1_order.clone()), ((-1).into(), 1.into()));
        let s = signature_data(&IntMatrix::square(3)).unwrap();
        assert_eq!((s.b_minus, s.b_zero, s.sig), (0, 3, 0));
        assert_eq!(s.h1_order, 0.into());
        assert_eq!(signature_data(&m(&[&[0, 1], &[2, 0]])), Err(Error::NotSymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn restricted_examples() {
        let hopf = FramedLink::new(closure(2, &[1, 1]), vec![0, 0]).unwrap();
        assert_eq!(restricted_matrix(&hopf, &[1]).unwrap(), m(&[&[1]]));
        assert_eq!(restricted_matrix(&hopf, &[]).unwrap(), framed_matrix(&hopf).unwrap().0);
        let all = restricted_matrix(&hopf, &[0, 1]).unwrap();
        assert_eq!(all.rows(), 0);
        assert_eq!(det_exact(&all).unwrap(), 1.into());
        assert!(restricted_matrix(&hopf, &[2]).is_err());
        assert!(restricted_matrix(&hopf, &[0, 0]).is_err());
        assert_eq!(sublink_matrix(&hopf, &[0]).unwrap().0, m(&[&[0]]));
        assert_eq!(sublink_matrix(&hopf, &[0, 1]).unwrap(), framed_matrix(&hopf).unwrap());
    }
}
