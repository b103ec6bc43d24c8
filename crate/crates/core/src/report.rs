//! Check reports: one entry per law and index tuple.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{multi_index, Matrix, Scalar};

/// First failing basis input of a law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Basis indices of the input, one per tensor factor of the domain.
    pub basis: Vec<usize>,
    /// Nonzero coordinates of `lhs - rhs` at that input.
    pub residual: Vec<(usize, Scalar)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(Witness),
    /// Not evaluated because a precondition failed.
    Skipped(String),
    /// Informational property, never a failure.
    Flag(bool),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub law: String,
    /// Group element indices the law was instantiated at.
    pub indices: Vec<usize>,
    pub status: Status,
}

impl CheckEntry {
    pub fn failed(&self) -> bool {
        matches!(self.status, Status::Fail(_))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        !self.entries.iter().any(CheckEntry::failed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.failed())
    }

    pub fn push(&mut self, law: &str, indices: &[usize], status: Status) {
        self.entries.push(CheckEntry {
            law: law.into(),
            indices: indices.to_vec(),
            status,
        });
    }

    pub fn pass(&mut self, law: &str, indices: &[usize]) {
        self.push(law, indices, Status::Pass);
    }

    pub fn fail(&mut self, law: &str, indices: &[usize], witness: Witness) {
        self.push(law, indices, Status::Fail(witness));
    }

    pub fn skip(&mut self, law: &str, reason: &str) {
        self.push(law, &[], Status::Skipped(reason.into()));
    }

    pub fn flag(&mut self, law: &str, indices: &[usize], value: bool) {
        self.push(law, indices, Status::Flag(value));
    }

    /// Records `lhs == rhs` as maps out of a tensor product with factor
    /// dimensions `input_dims`; the witness decodes the first differing column.
    pub fn law(
        &mut self,
        law: &str,
        indices: &[usize],
        lhs: &Matrix,
        rhs: &Matrix,
        input_dims: &[usize],
    ) -> bool {
        match lhs.first_difference(rhs) {
            None => {
                self.pass(law, indices);
                true
            }
            Some((col, residual)) => {
                let basis = multi_index(input_dims, col);
                self.fail(law, indices, Witness { basis, residual });
                false
            }
        }
    }

    /// Records that `m` vanishes.
    pub fn vanishes(
        &mut self,
        law: &str,
        indices: &[usize],
        m: &Matrix,
        input_dims: &[usize],
    ) -> bool {
        self.law(
            law,
            indices,
            m,
            &Matrix::zeros(m.rows(), m.cols()),
            input_dims,
        )
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    /// Appends `other` with every law name prefixed by `prefix.`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: Report) {
        for mut e in other.entries {
            let mut law = String::from(prefix);
            law.push('.');
            law.push_str(&e.law);
            e.law = law;
            self.entries.push(e);
        }
    }

    /// Whether every entry whose law starts with `prefix` passed.
    pub fn passed_prefix(&self, prefix: &str) -> bool {
        self.entries
            .iter()
            .filter(|e| e.law.starts_with(prefix))
            .all(|e| !e.failed())
    }

    pub fn flag_value(&self, law: &str) -> Option<bool> {
        self.entries
            .iter()
            .find(|e| e.law == law)
            .and_then(|e| match e.status {
                Status::Flag(v) => Some(v),
                _ => None,
            })
    }
}

impl fmt::Display for CheckEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}: ", self.law, self.indices)?;
        match &self.status {
            Status::Pass => f.write_str("pass"),
            Status::Fail(w) => write!(f, "FAIL at basis {:?}", w.basis),
            Status::Skipped(r) => write!(f, "skipped ({r})"),
            Status::Flag(v) => write!(f, "flag = {v}"),
        }
    }
}
