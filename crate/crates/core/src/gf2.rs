// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Bit rows over GF(2) and incremental row-echelon elimination.

use std::fmt;

const WORD: usize = 64;

/// Fixed-length bit vector; addition over GF(2) is XOR.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut row = BitRow::zeros(len);
        for i in ones {
            row.set(i);
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for row of {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for row of {}", self.len);
        self.words[i / WORD] ^= 1 << (i % WORD);
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn lowest_set_bit(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + bit)
            })
        })
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitRow({bits})")
    }
}

/// Rows kept in echelon form, keyed by the column of their lowest set bit.
///
/// Inserting a row reduces it against the stored pivots; a row that reduces
/// to zero was already in the span and is rejected.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    pivot_of_column: Vec<Option<usize>>,
    rows: Vec<BitRow>,
}

impl EchelonBasis {
    pub fn new(columns: usize) -> Self {
        EchelonBasis {
            pivot_of_column: vec![None; columns],
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` as far as the current pivots allow.
    pub fn reduce(&self, mut row: BitRow) -> BitRow {
        while let Some(col) = row.lowest_set_bit() {
            match self.pivot_of_column[col] {
                Some(r) => row.xor_assign(&self.rows[r]),
                None => break,
            }
        }
        row
    }

    pub fn contains(&self, row: &BitRow) -> bool {
        self.reduce(row.clone()).is_zero()
    }

    /// Adds `row` if it is independent of the stored rows. Returns whether
    /// it was added.
    pub fn insert(&mut self, row: BitRow) -> bool {
        let row = self.reduce(row);
        match row.lowest_set_bit() {
            Some(col) => {
                self.pivot_of_column[col] = Some(self.rows.len());
                self.rows.push(row);
                true
            }
            None => false,
        }
    }
}
