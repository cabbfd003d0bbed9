use crate::bigcox::ExactScalar;

/// A group element in its action on the root space, stored as a square
/// matrix over [`ExactScalar`] in the simple-root basis. Equal group
/// elements have equal matrices, so hashing the entries identifies
/// elements exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenericElement {
    dim: usize,
    /// Row-major entries.
    entries: Vec<ExactScalar>,
}

impl GenericElement {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![ExactScalar::ZERO; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = ExactScalar::ONE;
        }
        GenericElement { dim, entries }
    }

    pub(crate) fn from_entries(dim: usize, entries: Vec<ExactScalar>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        GenericElement { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> ExactScalar {
        self.entries[row * self.dim + col]
    }

    pub fn is_identity(&self) -> bool {
        self == &GenericElement::identity(self.dim)
    }

    /// Matrix product; under the column action this realizes the group
    /// product `(uv)(x) = u(v(x))`.
    pub fn compose(&self, rhs: &GenericElement) -> GenericElement {
        debug_assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut entries = vec![ExactScalar::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let lik = self.entries[i * n + k];
                if lik.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] = entries[i * n + j] + lik * rhs.entries[k * n + j];
                }
            }
        }
        GenericElement { dim: n, entries }
    }
}
