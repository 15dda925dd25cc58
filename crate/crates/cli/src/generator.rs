//! Seeded random instances: entries with `|a|, |b| ≤ 3`, at most 4 rows and 6 columns.

use matroid_torsion::{RMatrix, RingElement, RingKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const MAX_ROWS: usize = 4;
pub const MAX_COLUMNS: usize = 6;
pub const MAX_ENTRY: i64 = 3;

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Zero a third of the time, so that loops, parallel elements and rank drops occur.
    pub fn element(&mut self, ring: RingKind) -> RingElement {
        if self.rng.gen_ratio(1, 3) {
            return RingElement::zero(ring);
        }
        let a = self.rng.gen_range(-MAX_ENTRY..=MAX_ENTRY);
        let b = match ring {
            RingKind::Integers => 0,
            _ => self.rng.gen_range(-MAX_ENTRY..=MAX_ENTRY),
        };
        RingElement::new(ring, a, b)
    }

    pub fn matrix(&mut self, ring: RingKind) -> RMatrix {
        let rows = self.rng.gen_range(1..=MAX_ROWS);
        let cols = self.rng.gen_range(1..=MAX_COLUMNS);
        let entries = (0..rows).map(|_| (0..cols).map(|_| self.element(ring)).collect()).collect();
        RMatrix::from_rows(ring, entries).expect("rectangular by construction")
    }

    /// Incidence matrix of a random directed multigraph on `d + 1` vertices with the
    /// last row dropped. Such matrices are totally unimodular; self-loops give zero columns.
    pub fn unimodular(&mut self) -> RMatrix {
        let d = self.rng.gen_range(1..=MAX_ROWS);
        let n = self.rng.gen_range(1..=MAX_COLUMNS);
        let ring = RingKind::Integers;
        let columns: Vec<Vec<RingElement>> = (0..n)
            .map(|_| {
                let tail = self.rng.gen_range(0..=d);
                let head = self.rng.gen_range(0..=d);
                let mut c = vec![RingElement::zero(ring); d + 1];
                if tail != head {
                    c[tail] = RingElement::from_int(ring, -1);
                    c[head] = RingElement::one(ring);
                }
                c.truncate(d);
                c
            })
            .collect();
        RMatrix::from_columns(ring, d, &columns).expect("rectangular by construction")
    }
}
