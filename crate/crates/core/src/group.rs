//! Finite abelian groups given by multiplication tables.

use alloc::vec::Vec;

use crate::report::{Report, Witness};
use crate::Error;

/// Elements are `0..order`; `mul[a * order + b]` is `ab`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupTable {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
}

impl GroupTable {
    /// Builds a table without checking the group laws; see [`check_group`].
    pub fn new(
        order: usize,
        mul: Vec<usize>,
        identity: usize,
        inv: Vec<usize>,
    ) -> Result<Self, Error> {
        if order == 0 {
            return Err(Error::InvalidArgument("group order must be positive"));
        }
        if mul.len() != order * order || inv.len() != order {
            return Err(Error::InvalidArgument("group table has the wrong size"));
        }
        if identity >= order || mul.iter().chain(inv.iter()).any(|&x| x >= order) {
            return Err(Error::InvalidArgument("group table entry out of range"));
        }
        Ok(GroupTable {
            order,
            mul,
            identity,
            inv,
        })
    }

    /// `C_n` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let inv = (0..n).map(|k| (n - k) % n).collect();
        GroupTable {
            order: n,
            mul,
            identity: 0,
            inv,
        }
    }

    pub fn trivial() -> Self {
        GroupTable::cyclic(1)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.order
    }

    /// All pairs `(alpha, beta)`, `alpha` slowest.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.order;
        (0..n * n).map(move |i| (i / n, i % n))
    }

    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.order;
        (0..n * n * n).map(move |i| (i / (n * n), (i / n) % n, i % n))
    }

    /// Index of the pair `(alpha, beta)` in pair-indexed families.
    pub fn pair_index(&self, a: usize, b: usize) -> usize {
        a * self.order + b
    }

    pub fn raw_mul(&self) -> &[usize] {
        &self.mul
    }

    pub fn raw_inv(&self) -> &[usize] {
        &self.inv
    }
}

fn witness(basis: &[usize]) -> Witness {
    Witness {
        basis: basis.to_vec(),
        residual: Vec::new(),
    }
}

/// Associativity, commutativity, identity and inverse laws, each with the
/// first offending elements as witness.
pub fn check_group(g: &GroupTable) -> Report {
    let mut r = Report::new();
    let assoc = g
        .triples()
        .find(|&(a, b, c)| g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)));
    match assoc {
        None => r.pass("group.associativity", &[]),
        Some((a, b, c)) => r.fail("group.associativity", &[], witness(&[a, b, c])),
    }
    match g.pairs().find(|&(a, b)| g.mul(a, b) != g.mul(b, a)) {
        None => r.pass("group.commutativity", &[]),
        Some((a, b)) => r.fail("group.commutativity", &[], witness(&[a, b])),
    }
    let e = g.identity();
    match g.elements().find(|&a| g.mul(e, a) != a || g.mul(a, e) != a) {
        None => r.pass("group.identity", &[]),
        Some(a) => r.fail("group.identity", &[], witness(&[a])),
    }
    match g
        .elements()
        .find(|&a| g.mul(a, g.inv(a)) != e || g.mul(g.inv(a), a) != e)
    {
        None => r.pass("group.inverses", &[]),
        Some(a) => r.fail("group.inverses", &[], witness(&[a])),
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn cyclic_groups_pass() {
        assert!(check_group(&GroupTable::cyclic(2)).passed());
        assert!(check_group(&GroupTable::cyclic(4)).passed());
        assert!(check_group(&GroupTable::trivial()).passed());
    }

    #[test]
    fn idempotent_non_identity_fails_identity_law() {
        // {e, g} with g*g = g: g is not invertible and e is not the only idempotent
        let g = GroupTable::new(2, alloc::vec![0, 1, 1, 1], 0, alloc::vec![0, 1]).unwrap();
        let r = check_group(&g);
        let e = r
            .entries
            .iter()
            .find(|e| e.law == "group.inverses")
            .unwrap();
        assert!(matches!(&e.status, Status::Fail(w) if w.basis == [1]));
        // the identity law itself still holds for e = 0
        let bad = GroupTable::new(2, alloc::vec![0, 1, 1, 1], 1, alloc::vec![0, 1]).unwrap();
        let r = check_group(&bad);
        let e = r
            .entries
            .iter()
            .find(|e| e.law == "group.identity")
            .unwrap();
        assert!(matches!(&e.status, Status::Fail(w) if w.basis == [0]));
    }

    #[test]
    fn c4_exhaustive_triples() {
        let g = GroupTable::cyclic(4);
        let mut count = 0;
        for (a, b, c) in g.triples() {
            assert_eq!(g.mul(g.mul(a, b), c), (a + b + c) % 4);
            count += 1;
        }
        assert_eq!(count, 64);
    }
}
