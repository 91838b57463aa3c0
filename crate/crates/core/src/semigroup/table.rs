use crate::vector::IntVector;

/// Dense membership bitmap for the box `[0, extents]` of an affine semigroup,
/// filled bottom-up: a point is a member iff it is 0 or some generator can be
/// subtracted to land on a member.
#[derive(Debug)]
pub struct MembershipTable {
    extents: Vec<i64>,
    strides: Vec<usize>,
    bits: Vec<bool>,
}

/// Upper limit on table size; beyond this a query is refused.
pub const MAX_TABLE_POINTS: u128 = 1 << 28;

pub(crate) fn table_points(extents: &[i64]) -> u128 {
    extents.iter().map(|&e| (e.max(0) as u128) + 1).product()
}

impl MembershipTable {
    pub fn build(generators: &[IntVector], extents: Vec<i64>) -> Self {
        let n = extents.len();
        let mut strides = vec![1usize; n];
        for j in (0..n.saturating_sub(1)).rev() {
            strides[j] = strides[j + 1] * (extents[j + 1] as usize + 1);
        }
        let total = table_points(&extents) as usize;
        let mut bits = vec![false; total];
        let gens: Vec<(&IntVector, usize)> = generators
            .iter()
            .filter(|g| g.le_componentwise(&IntVector::new(extents.clone())))
            .map(|g| {
                let off = g.entries().iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum();
                (g, off)
            })
            .collect();
        let mut cur = vec![0i64; n];
        for idx in 0..total {
            bits[idx] = idx == 0
                || gens
                    .iter()
                    .any(|(g, off)| g.entries().iter().zip(&cur).all(|(a, b)| a <= b) && bits[idx - off]);
            // advance the lexicographic counter
            for j in (0..n).rev() {
                if cur[j] < extents[j] {
                    cur[j] += 1;
                    break;
                }
                cur[j] = 0;
            }
        }
        MembershipTable { extents, strides, bits }
    }

    pub fn extents(&self) -> &[i64] {
        &self.extents
    }

    pub fn covers(&self, v: &IntVector) -> bool {
        v.entries().iter().zip(&self.extents).all(|(x, e)| x <= e)
    }

    /// Membership for a point inside the table; points with a negative
    /// coordinate are never members.
    pub fn get(&self, v: &IntVector) -> bool {
        if !v.is_nonnegative() {
            return false;
        }
        debug_assert!(self.covers(v), "{v} outside table {:?}", self.extents);
        let idx: usize = v
            .entries()
            .iter()
            .zip(&self.strides)
            .map(|(&x, &s)| x as usize * s)
            .sum();
        self.bits[idx]
    }

    /// Like [`MembershipTable::get`] but `None` outside the table.
    pub fn try_get(&self, v: &IntVector) -> Option<bool> {
        if !v.is_nonnegative() {
            return Some(false);
        }
        self.covers(v).then(|| self.get(v))
    }
}
