use serde::{Deserialize, Serialize};

use crate::bigcox::{ExactScalar, GenericElement};
use crate::error::{Error, Result};
use crate::groups::{Family, GroupDescriptor};

/// A Coxeter matrix: symmetric, 1 on the diagonal, off-diagonal orders
/// at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CoxeterMatrixJson", into = "CoxeterMatrixJson")]
pub struct CoxeterMatrix {
    size: usize,
    m: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct CoxeterMatrixJson {
    size: usize,
    m: Vec<Vec<u32>>,
}

impl From<CoxeterMatrix> for CoxeterMatrixJson {
    fn from(cm: CoxeterMatrix) -> Self {
        CoxeterMatrixJson {
            size: cm.size,
            m: cm.m,
        }
    }
}

impl TryFrom<CoxeterMatrixJson> for CoxeterMatrix {
    type Error = Error;
    fn try_from(raw: CoxeterMatrixJson) -> Result<Self> {
        CoxeterMatrix::new(raw.m)
    }
}

impl CoxeterMatrix {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let size = m.len();
        let fail = |msg: String| Err(Error::InvalidCoxeterMatrix(msg));
        if size == 0 {
            return fail("empty matrix".to_string());
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != size {
                return fail(format!("row {i} has wrong length"));
            }
            for (j, &v) in row.iter().enumerate() {
                if i == j && v != 1 {
                    return fail("diagonal entries must be 1".to_string());
                }
                if i != j && v < 2 {
                    return fail(format!("order m({i},{j}) must be at least 2"));
                }
                if v != m[j][i] {
                    return fail("matrix must be symmetric".to_string());
                }
            }
        }
        Ok(CoxeterMatrix { size, m })
    }

    /// Builds a matrix from the edges of a tree-shaped diagram; omitted
    /// pairs commute.
    pub fn from_edges(size: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut m = vec![vec![2u32; size]; size];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(i, j, order) in edges {
            if i >= size || j >= size {
                return Err(Error::InvalidCoxeterMatrix(format!(
                    "edge ({i},{j}) out of range"
                )));
            }
            m[i][j] = order;
            m[j][i] = order;
        }
        CoxeterMatrix::new(m)
    }

    /// The named presets: `I2:<m>`, `H3`, `F4`, `E6`, `E7`, `E8`.
    ///
    /// `H3` is numbered so that `{s1,s2}` is the symmetric-group parabolic
    /// and `{s2,s3}` the pentagonal one.
    pub fn preset(name: &str) -> Result<Self> {
        if let Some(m_text) = name.strip_prefix("I2:") {
            let order: u32 = m_text
                .parse()
                .map_err(|_| Error::Parse(format!("bad dihedral order `{m_text}`")))?;
            if order < 2 {
                return Err(Error::InvalidCoxeterMatrix(
                    "dihedral order must be at least 2".to_string(),
                ));
            }
            return CoxeterMatrix::from_edges(2, &[(0, 1, order)]);
        }
        match name {
            "H3" => CoxeterMatrix::from_edges(3, &[(0, 1, 3), (1, 2, 5)]),
            "F4" => CoxeterMatrix::from_edges(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)]),
            "E6" => CoxeterMatrix::from_edges(
                6,
                &[(0, 2, 3), (2, 3, 3), (3, 4, 3), (4, 5, 3), (1, 3, 3)],
            ),
            "E7" => CoxeterMatrix::from_edges(
                7,
                &[
                    (0, 2, 3),
                    (2, 3, 3),
                    (3, 4, 3),
                    (4, 5, 3),
                    (5, 6, 3),
                    (1, 3, 3),
                ],
            ),
            "E8" => CoxeterMatrix::from_edges(
                8,
                &[
                    (0, 2, 3),
                    (2, 3, 3),
                    (3, 4, 3),
                    (4, 5, 3),
                    (5, 6, 3),
                    (6, 7, 3),
                    (1, 3, 3),
                ],
            ),
            other => Err(Error::Parse(format!("unknown preset `{other}`"))),
        }
    }

    /// The diagram of a classical descriptor, nodes in generator order
    /// (`s_1..s_{n-1}` for A, `s_0..s_{n-1}` for B and D).
    pub fn classical(descriptor: GroupDescriptor) -> Result<Self> {
        let k = descriptor.coxeter_rank();
        if k == 0 {
            return Err(Error::InvalidCoxeterMatrix(
                "the trivial group has no diagram".to_string(),
            ));
        }
        let mut edges = Vec::new();
        match descriptor.family() {
            Family::A => {
                for i in 0..k - 1 {
                    edges.push((i, i + 1, 3));
                }
            }
            Family::B => {
                if k >= 2 {
                    edges.push((0, 1, 4));
                }
                for i in 1..k - 1 {
                    edges.push((i, i + 1, 3));
                }
            }
            Family::D => {
                if k >= 3 {
                    edges.push((0, 2, 3));
                    edges.push((1, 2, 3));
                }
                for i in 2..k - 1 {
                    edges.push((i, i + 1, 3));
                }
            }
        }
        CoxeterMatrix::from_edges(k, &edges)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn order(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    /// The induced submatrix on a sorted list of nodes.
    pub fn submatrix(&self, nodes: &[usize]) -> CoxeterMatrix {
        let m = nodes
            .iter()
            .map(|&i| nodes.iter().map(|&j| self.m[i][j]).collect())
            .collect();
        CoxeterMatrix::new(m).expect("submatrix of a valid matrix")
    }

    /// The generator matrices of the reflection representation over the
    /// golden-ratio integers, acting on simple-root coordinates.
    ///
    /// Each bond order is realized through a pair of nonpositive Cartan
    /// coefficients whose product is `4cos^2(pi/m)`: `(-1,-1)` for 3,
    /// `(-1,-2)` for 4, `(-phi,-phi)` for 5 and `(-1,-3)` for 6. Bond
    /// orders outside `{2,3,4,5,6}` leave the golden-ratio field and are
    /// rejected.
    #[allow(clippy::needless_range_loop)]
    pub fn generator_matrices(&self) -> Result<Vec<GenericElement>> {
        let n = self.size;
        let mut cartan = vec![vec![ExactScalar::ZERO; n]; n];
        for i in 0..n {
            cartan[i][i] = ExactScalar::from_int(2);
            for j in i + 1..n {
                let (cij, cji) = cartan_pair(self.m[i][j])?;
                cartan[i][j] = cij;
                cartan[j][i] = cji;
            }
        }
        let mut generators = Vec::with_capacity(n);
        for s in 0..n {
            // s(alpha_j) = alpha_j - cartan[s][j] * alpha_s: the matrix is
            // the identity with row s replaced by -cartan[s][.]
            let mut entries = vec![ExactScalar::ZERO; n * n];
            for i in 0..n {
                entries[i * n + i] = ExactScalar::ONE;
            }
            for j in 0..n {
                entries[s * n + j] = entries[s * n + j] - cartan[s][j];
            }
            generators.push(GenericElement::from_entries(n, entries));
        }
        Ok(generators)
    }
}

fn cartan_pair(order: u32) -> Result<(ExactScalar, ExactScalar)> {
    let int = ExactScalar::from_int;
    match order {
        2 => Ok((ExactScalar::ZERO, ExactScalar::ZERO)),
        3 => Ok((int(-1), int(-1))),
        4 => Ok((int(-1), int(-2))),
        5 => Ok((-ExactScalar::PHI, -ExactScalar::PHI)),
        6 => Ok((int(-1), int(-3))),
        other => Err(Error::Unsupported(format!(
            "bond order {other} is not representable over the golden-ratio field"
        ))),
    }
}
