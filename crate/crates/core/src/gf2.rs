//! Dense vectors over GF(2) and the row reduction used by subspaces and Wu solving.

use std::fmt;

const WORD: usize = 64;

/// A fixed-length bit vector; addition is XOR.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Vec {
    len: usize,
    words: Vec<u64>,
}

impl Gf2Vec {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut v = Self::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Vector whose coordinate `i` is bit `i` of `mask`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= WORD, "mask vectors are limited to {WORD} coordinates");
        let mut v = Self::zeros(len);
        if len > 0 {
            let keep = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
            v.words[0] = mask & keep;
        }
        v
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    pub fn xor_assign(&mut self, other: &Gf2Vec) {
        assert_eq!(self.len, other.len, "GF(2) vectors of different length");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &Gf2Vec) -> bool {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// Low 64 coordinates packed into an integer (coordinate `i` is bit `i`).
    pub fn to_mask(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl std::ops::Add for &Gf2Vec {
    type Output = Gf2Vec;
    fn add(self, rhs: &Gf2Vec) -> Gf2Vec {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }
}

impl std::ops::AddAssign<&Gf2Vec> for Gf2Vec {
    fn add_assign(&mut self, rhs: &Gf2Vec) {
        self.xor_assign(rhs);
    }
}

impl fmt::Debug for Gf2Vec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str("]")
    }
}

/// Rows in reduced row echelon form. Pivots are the lowest set coordinate of each
/// row, strictly increasing; every pivot column is clear in all other rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Echelon {
    width: usize,
    rows: Vec<Gf2Vec>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn empty(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows<I: IntoIterator<Item = Gf2Vec>>(width: usize, rows: I) -> Self {
        let mut e = Self::empty(width);
        for r in rows {
            e.insert(r);
        }
        e
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Gf2Vec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce `v` against the rows; the result is the canonical residue of `v`
    /// modulo the span, together with the mask of rows used.
    pub fn reduce(&self, v: &Gf2Vec) -> (Gf2Vec, Vec<bool>) {
        assert_eq!(v.len(), self.width, "vector does not match echelon width");
        let mut r = v.clone();
        let mut used = vec![false; self.rows.len()];
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if r.get(p) {
                r.xor_assign(row);
                used[k] = true;
            }
        }
        (r, used)
    }

    pub fn contains(&self, v: &Gf2Vec) -> bool {
        self.reduce(v).0.is_zero()
    }

    /// Adds `v` to the span. Returns `false` if it was already in it.
    pub fn insert(&mut self, v: Gf2Vec) -> bool {
        let (mut r, _) = self.reduce(&v);
        let Some(p) = r.first_one() else {
            return false;
        };
        // clear the new pivot column from existing rows
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        // r is already reduced against old pivots, and old rows never carry p now
        let at = self.pivots.partition_point(|&q| q < p);
        r.set(p, true);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }
}

/// Solves `A x = b` over GF(2) for a square `A` given by rows.
/// Returns `None` when `A` is singular.
pub fn solve_square(a: &[Gf2Vec], b: &Gf2Vec) -> Option<Gf2Vec> {
    let n = a.len();
    assert_eq!(b.len(), n);
    // augmented rows: [row | rhs]
    let mut m: Vec<(Gf2Vec, bool)> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            assert_eq!(r.len(), n, "matrix is not square");
            (r.clone(), b.get(i))
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| m[r].0.get(col))?;
        m.swap(col, pivot);
        let (prow, pb) = m[col].clone();
        for (r, (row, rb)) in m.iter_mut().enumerate() {
            if r != col && row.get(col) {
                row.xor_assign(&prow);
                *rb ^= pb;
            }
        }
    }
    Some(Gf2Vec::from_bits(m.into_iter().map(|(_, rb)| rb)))
}
