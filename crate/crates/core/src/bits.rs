//! Bit vectors packed into 64-bit words.
//!
//! XOR and popcount over packed words are the inner loop of everything in
//! this crate (Pauli products, syndrome extraction, coset enumeration), so
//! the representation is kept deliberately bare.

use std::fmt;

/// A fixed-length bit vector backed by `u64` words. Bit `i` of the vector is
/// bit `i % 64` of word `i / 64`; unused high bits of the last word are kept
/// zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    nbits: usize,
    words: Vec<u64>,
}

impl BitVec {
    /// All-zero vector of `nbits` bits.
    pub fn zeros(nbits: usize) -> Self {
        BitVec {
            nbits,
            words: vec![0; nbits.div_ceil(64)],
        }
    }

    /// Vector with exactly the listed bits set.
    ///
    /// Panics if an index is out of range.
    pub fn from_indices(nbits: usize, indices: &[usize]) -> Self {
        let mut v = Self::zeros(nbits);
        for &i in indices {
            v.set(i, true);
        }
        v
    }

    /// Build from the low `nbits` bits of a `u64`.
    pub fn from_u64(nbits: usize, word: u64) -> Self {
        assert!(nbits <= 64, "from_u64 supports at most 64 bits");
        let mut v = Self::zeros(nbits);
        if nbits > 0 {
            let mask = if nbits == 64 { !0 } else { (1u64 << nbits) - 1 };
            if !v.words.is_empty() {
                v.words[0] = word & mask;
            }
        }
        v
    }

    pub fn len(&self) -> usize {
        self.nbits
    }

    pub fn is_empty(&self) -> bool {
        self.nbits == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.nbits, "bit index {} out of range {}", i, self.nbits);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.nbits, "bit index {} out of range {}", i, self.nbits);
        let w = &mut self.words[i / 64];
        if value {
            *w |= 1 << (i % 64);
        } else {
            *w &= !(1 << (i % 64));
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.nbits, "bit index {} out of range {}", i, self.nbits);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    /// In-place XOR with another vector of the same length.
    pub fn xor_assign(&mut self, rhs: &BitVec) {
        assert_eq!(self.nbits, rhs.nbits, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(rhs.words.iter()) {
            *a ^= b;
        }
    }

    pub fn xor(&self, rhs: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(rhs);
        out
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Parity of `popcount(self AND rhs)`; the GF(2) inner product.
    pub fn parity_and(&self, rhs: &BitVec) -> bool {
        assert_eq!(self.nbits, rhs.nbits, "length mismatch in parity_and");
        let mut acc = 0u64;
        for (a, b) in self.words.iter().zip(rhs.words.iter()) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Popcount of `self AND rhs`.
    pub fn count_and(&self, rhs: &BitVec) -> usize {
        assert_eq!(self.nbits, rhs.nbits, "length mismatch in count_and");
        self.words
            .iter()
            .zip(rhs.words.iter())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Indices of set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// The vector as a single word. Panics if longer than 64 bits.
    pub fn as_u64(&self) -> u64 {
        assert!(self.nbits <= 64, "as_u64 requires at most 64 bits");
        self.words.first().copied().unwrap_or(0)
    }

    /// Index of the lowest set bit, if any.
    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nbits {
            write!(f, "{}", if self.get(i) { '1' } else { '0' })?;
        }
        Ok(())
    }
}
