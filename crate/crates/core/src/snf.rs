//! Integer matrices and Smith normal form.
//!
//! This is the independent oracle for [`crate::abelian`]: every functor there has
//! a closed-form cyclic rule, and every one of them can also be read off a
//! presentation matrix. Matrices act on row vectors, so an `r × c` matrix is a map
//! `Z^r → Z^c` and its rows are relations among `c` generators.

use crate::abelian::{CoefficientRing, FgAbelianGroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(n, n, &vec![1; n])
    }

    /// `rows × cols` matrix with `diag` on the leading diagonal.
    pub fn diagonal(rows: usize, cols: usize, diag: &[i128]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = d;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: rows.len(),
            cols,
            entries: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let mut k = Self::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a == 0 {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        k[(i * other.rows + p, j * other.cols + q)] = a * other[(p, q)];
                    }
                }
            }
        }
        k
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "stacked matrices need equal widths");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Columns of `self` followed by columns of `other`.
    pub fn hstack(&self, other: &Self) -> Self {
        self.transpose().stack(&other.transpose()).transpose()
    }

    pub fn scaled(&self, factor: i128) -> Self {
        let mut m = self.clone();
        m.entries.iter_mut().for_each(|x| *x *= factor);
        m
    }

    /// Block diagonal `diag(self, other)`.
    pub fn block_diagonal(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    /// Matrix product for the row-vector convention: `(self · other)` is the map
    /// "first `self`, then `other`".
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    m[(i, j)] += a * other[(k, j)];
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= f * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, f: i128) {
        for j in 0..self.cols {
            let v = self[(src, j)];
            self[(dst, j)] -= f * v;
        }
    }

    fn sub_col(&mut self, dst: usize, src: usize, f: i128) {
        for i in 0..self.rows {
            let v = self[(i, src)];
            self[(i, dst)] -= f * v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = i128;
    fn index(&self, (i, j): (usize, usize)) -> &i128 {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i128 {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

/// Nonzero invariant factors `d₁ | d₂ | … | d_r` of the Smith normal form; `r` is the rank.
pub fn smith_invariants(m: &IntMatrix) -> Vec<i128> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero |entry| in the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[(i, j)] != 0)
            .min_by_key(|&(i, j)| a[(i, j)].abs())
        else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a[(t, t)];
            let mut dirty = false;
            for i in t + 1..rows {
                let q = a[(i, t)] / p;
                if q != 0 {
                    a.sub_row(i, t, q);
                }
                if a[(i, t)] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                let q = a[(t, j)] / p;
                if q != 0 {
                    a.sub_col(j, t, q);
                }
                if a[(t, j)] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                // the pivot must divide the whole remaining block
                let offender = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[(i, j)] % p != 0);
                match offender {
                    None => break,
                    Some((i, _)) => {
                        // fold the offending row into the pivot row and retry
                        a.sub_row(t, i, -1);
                        continue;
                    }
                }
            }
            // move the smallest remainder in row/column t to the pivot position
            let (bi, bj) = (t..rows)
                .map(|i| (i, t))
                .chain((t..cols).map(|j| (t, j)))
                .filter(|&(i, j)| a[(i, j)] != 0)
                .min_by_key(|&(i, j)| a[(i, j)].abs())
                .expect("pivot row/column is nonzero");
            a.swap_rows(t, bi);
            a.swap_cols(t, bj);
        }
        diag.push(a[(t, t)].abs());
    }
    diag
}

/// Rank over `Q`.
pub fn rank(m: &IntMatrix) -> usize {
    smith_invariants(m).len()
}

/// The cokernel `Z^cols / rowspace(m)` in primary decomposition.
pub fn snf_oracle(m: &IntMatrix) -> FgAbelianGroup {
    let inv = smith_invariants(m);
    let free = m.cols - inv.len();
    FgAbelianGroup::new(free, inv.into_iter().filter(|&d| d > 1).map(|d| d as u64))
        .expect("invariant factors are positive")
}

/// Kernel of `x ↦ x·m` on `(Z/modulus)^rows`. With `m = U D V` in Smith form the
/// kernel is `⨁ Z/gcd(dᵢ, modulus)` over the diagonal plus a `Z/modulus` for each
/// zero row of `D`.
pub fn kernel_mod(m: &IntMatrix, modulus: u64) -> FgAbelianGroup {
    let inv = smith_invariants(m);
    let extra = m.rows - inv.len();
    let gcd = |a: u64, b: u64| {
        let (mut a, mut b) = (a, b);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    FgAbelianGroup::new(
        0,
        inv.iter()
            .map(|&d| gcd(d as u64, modulus))
            .chain(std::iter::repeat_n(modulus, extra)),
    )
    .expect("positive orders")
}

/// Homology at the middle of `C_{k+1} --incoming--> C_k --outgoing--> C_{k-1}`.
///
/// # Panics
/// If the two maps do not compose to zero.
pub fn chain_homology(incoming: &IntMatrix, outgoing: &IntMatrix) -> FgAbelianGroup {
    assert_eq!(incoming.cols, outgoing.rows, "chain maps do not line up");
    assert!(incoming.compose(outgoing).is_zero(), "d∘d ≠ 0");
    let inv_in = smith_invariants(incoming);
    let free = outgoing.rows - rank(outgoing) - inv_in.len();
    FgAbelianGroup::new(free, inv_in.into_iter().filter(|&d| d > 1).map(|d| d as u64))
        .expect("invariant factors are positive")
}

/// Presentation matrix of `Z^free ⊕ ⨁ Z/q`: one generator per summand and a
/// relation `q·g` for each torsion generator.
pub fn presentation(g: &FgAbelianGroup) -> IntMatrix {
    let t = g.torsion_orders();
    let n = g.free_rank() + t.len();
    let mut m = IntMatrix::zeros(t.len(), n);
    for (k, &q) in t.iter().enumerate() {
        m[(k, g.free_rank() + k)] = q as i128;
    }
    m
}

/// `A ⊗ B` as the cokernel of `[P_A ⊗ I; I ⊗ P_B]`.
pub fn tensor_oracle(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    snf_oracle(&tensor_resolution(a, b).1)
}

/// `Tor(A, B)` as the middle homology of the tensor product of the two
/// presentations viewed as free resolutions.
pub fn tor_oracle(a: &FgAbelianGroup, b: &FgAbelianGroup) -> FgAbelianGroup {
    let (d2, d1) = tensor_resolution(a, b);
    chain_homology(&d2, &d1)
}

/// `(d₂, d₁)` of `R_A⊗R_B → R_A⊗F_B ⊕ F_A⊗R_B → F_A⊗F_B`.
fn tensor_resolution(a: &FgAbelianGroup, b: &FgAbelianGroup) -> (IntMatrix, IntMatrix) {
    let (pa, pb) = (presentation(a), presentation(b));
    let (ra, ga, rb, gb) = (pa.rows(), pa.cols(), pb.rows(), pb.cols());
    let d1 = pa
        .kronecker(&IntMatrix::identity(gb))
        .stack(&IntMatrix::identity(ga).kronecker(&pb));
    let d2 = IntMatrix::identity(ra)
        .kronecker(&pb)
        .hstack(&pa.kronecker(&IntMatrix::identity(rb)).scaled(-1));
    (d2, d1)
}

/// `Hom(A, R)`: solutions of `P_A x = 0` over `R`.
pub fn hom_oracle(a: &FgAbelianGroup, ring: CoefficientRing) -> FgAbelianGroup {
    let p = presentation(a);
    match ring {
        CoefficientRing::Integers => FgAbelianGroup::free(p.cols() - rank(&p)),
        CoefficientRing::Modular(m) => kernel_mod(&p.transpose(), m),
    }
}

/// `Ext(A, R)`: cokernel of `Hom(F_A, R) → Hom(R_A, R)`.
pub fn ext_oracle(a: &FgAbelianGroup, ring: CoefficientRing) -> FgAbelianGroup {
    let t = presentation(a).transpose();
    match ring {
        CoefficientRing::Integers => snf_oracle(&t),
        CoefficientRing::Modular(m) => snf_oracle(&t.stack(&IntMatrix::identity(t.cols()).scaled(m as i128))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> FgAbelianGroup {
        s.parse().unwrap()
    }

    #[test]
    fn one_by_one_and_empty() {
        assert_eq!(snf_oracle(&IntMatrix::diagonal(1, 1, &[2])), g("Z/2"));
        assert_eq!(snf_oracle(&IntMatrix::zeros(0, 3)), g("Z^3"));
    }

    #[test]
    fn kronecker_presentation_of_z4_tensor_z6() {
        // generators g⊗h; relations 4(g⊗h) and 6(g⊗h)
        let a = IntMatrix::diagonal(1, 1, &[4]);
        let b = IntMatrix::diagonal(1, 1, &[6]);
        let m = a.kronecker(&IntMatrix::identity(1)).stack(&IntMatrix::identity(1).kronecker(&b));
        assert_eq!(snf_oracle(&m), g("Z/2"));
    }

    #[test]
    fn invariant_factors_divide() {
        let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith_invariants(&m), vec![2, 6, 12]);
        let m = IntMatrix::from_rows(&[vec![6, 0], vec![0, 4]]);
        assert_eq!(smith_invariants(&m), vec![2, 12]);
    }

    #[test]
    fn klein_bottle_cellular_chain() {
        // one 0-cell, 1-cells a, b, one 2-cell with word a b a b⁻¹
        let d2 = IntMatrix::from_rows(&[vec![2, 0]]);
        let d1 = IntMatrix::zeros(2, 1);
        assert_eq!(chain_homology(&d2, &d1), g("Z + Z/2"));
        assert_eq!(chain_homology(&IntMatrix::zeros(0, 1), &d2), g("0"));
    }

    #[test]
    fn functor_oracles_on_fixed_groups() {
        assert_eq!(tensor_oracle(&g("Z/4"), &g("Z/2")), g("Z/2"));
        assert_eq!(tensor_oracle(&g("Z/2"), &g("Z/3")), g("0"));
        assert_eq!(tor_oracle(&g("Z/2"), &g("Z/2")), g("Z/2"));
        assert_eq!(tor_oracle(&g("Z/4"), &g("Z/6")), g("Z/2"));
        assert_eq!(tor_oracle(&g("Z^2"), &g("Z/6")), g("0"));
        assert_eq!(ext_oracle(&g("Z/8"), CoefficientRing::Z2), g("Z/2"));
        assert_eq!(ext_oracle(&g("Z + Z/9"), CoefficientRing::Integers), g("Z/9"));
        assert_eq!(hom_oracle(&g("Z + Z/6"), CoefficientRing::Modular(4)), g("Z/4 + Z/2"));
        assert_eq!(hom_oracle(&g("Z^2 + Z/6"), CoefficientRing::Integers), g("Z^2"));
    }

    #[test]
    fn kernel_mod_counts() {
        // x ↦ 2x on Z/4 has kernel Z/2
        assert_eq!(kernel_mod(&IntMatrix::diagonal(1, 1, &[2]), 4), g("Z/2"));
        assert_eq!(kernel_mod(&IntMatrix::zeros(2, 0), 3), g("Z/3 + Z/3"));
    }
}
