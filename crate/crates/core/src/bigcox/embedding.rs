use crate::bigcox::CoxeterMatrix;
use crate::error::{Error, Result};
use crate::groups::{Family, GenSet, GroupDescriptor};

/// What a parabolic subgroup is modeled as, for evaluating base statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParabolicModel {
    Classical(GroupDescriptor),
    Dihedral(u32),
    Trivial,
}

/// An identification of a parabolic subdiagram with a model group: the
/// relabeling array sends the model's diagram nodes to generators of the
/// big group, and is validated by Coxeter-matrix equality.
#[derive(Debug, Clone)]
pub struct SubgroupEmbedding {
    subset: GenSet,
    model: ParabolicModel,
    relabel: Vec<usize>,
}

impl SubgroupEmbedding {
    pub fn new(
        matrix: &CoxeterMatrix,
        subset: GenSet,
        model: ParabolicModel,
        relabel: Vec<usize>,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::Unsupported(msg));
        if subset.iter().any(|s| s >= matrix.size()) {
            return invalid(format!("subset {subset} exceeds the diagram"));
        }
        let mut covered: Vec<usize> = relabel.clone();
        covered.sort_unstable();
        covered.dedup();
        if covered != subset.iter().collect::<Vec<_>>() {
            return invalid(format!(
                "relabeling {relabel:?} is not a bijection onto {subset}"
            ));
        }
        let model_matrix = match model {
            ParabolicModel::Trivial => {
                if relabel.is_empty() {
                    return Ok(SubgroupEmbedding {
                        subset,
                        model,
                        relabel,
                    });
                }
                return invalid("trivial model with nonempty subset".to_string());
            }
            ParabolicModel::Classical(d) => CoxeterMatrix::classical(d)?,
            ParabolicModel::Dihedral(m) => CoxeterMatrix::from_edges(2, &[(0, 1, m)])?,
        };
        if model_matrix.size() != relabel.len() {
            return invalid("relabeling length does not match the model rank".to_string());
        }
        for a in 0..relabel.len() {
            for b in 0..relabel.len() {
                if model_matrix.order(a, b) != matrix.order(relabel[a], relabel[b]) {
                    return invalid(format!(
                        "bond orders differ at model pair ({a},{b}) under {relabel:?}"
                    ));
                }
            }
        }
        Ok(SubgroupEmbedding {
            subset,
            model,
            relabel,
        })
    }

    /// Finds a model for the subdiagram on `subset`, trying the classical
    /// families (A, then B, then D) before a plain dihedral group.
    pub fn detect(matrix: &CoxeterMatrix, subset: GenSet) -> Result<Self> {
        let nodes: Vec<usize> = subset.iter().collect();
        if nodes.iter().any(|&s| s >= matrix.size()) {
            return Err(Error::Unsupported(format!(
                "subset {subset} exceeds the diagram"
            )));
        }
        let k = nodes.len();
        if k == 0 {
            return SubgroupEmbedding::new(matrix, subset, ParabolicModel::Trivial, Vec::new());
        }
        let sub = matrix.submatrix(&nodes);
        let mut candidates = vec![ParabolicModel::Classical(GroupDescriptor::new(
            Family::A,
            k + 1,
        )?)];
        if k >= 2 {
            candidates.push(ParabolicModel::Classical(GroupDescriptor::new(
                Family::B,
                k,
            )?));
            candidates.push(ParabolicModel::Classical(GroupDescriptor::new(
                Family::D,
                k,
            )?));
        }
        if k == 2 {
            candidates.push(ParabolicModel::Dihedral(sub.order(0, 1)));
        }
        for model in candidates {
            let model_matrix = match model {
                ParabolicModel::Classical(d) => CoxeterMatrix::classical(d)?,
                ParabolicModel::Dihedral(m) => CoxeterMatrix::from_edges(2, &[(0, 1, m)])?,
                ParabolicModel::Trivial => unreachable!(),
            };
            if let Some(perm) = find_relabeling(&sub, &model_matrix) {
                let relabel = perm.iter().map(|&p| nodes[p]).collect();
                return SubgroupEmbedding::new(matrix, subset, model, relabel);
            }
        }
        Err(Error::Unsupported(format!(
            "no classical or dihedral model matches the subdiagram on {subset}"
        )))
    }

    pub fn subset(&self) -> GenSet {
        self.subset
    }

    pub fn model(&self) -> &ParabolicModel {
        &self.model
    }

    pub fn relabel(&self) -> &[usize] {
        &self.relabel
    }

    /// The model group's generator index for diagram node `p` (type A
    /// generators are numbered from 1, the others from 0).
    pub fn model_generator_index(&self, p: usize) -> usize {
        match self.model {
            ParabolicModel::Classical(d) if d.family() == Family::A => p + 1,
            _ => p,
        }
    }
}

/// Backtracking search for a node bijection carrying `model` bond orders
/// onto `sub` bond orders; `perm[model_node] = sub_node`.
fn find_relabeling(sub: &CoxeterMatrix, model: &CoxeterMatrix) -> Option<Vec<usize>> {
    if sub.size() != model.size() {
        return None;
    }
    let k = sub.size();
    let mut perm = vec![usize::MAX; k];
    let mut used = vec![false; k];

    fn place(
        a: usize,
        k: usize,
        sub: &CoxeterMatrix,
        model: &CoxeterMatrix,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if a == k {
            return true;
        }
        for cand in 0..k {
            if used[cand] {
                continue;
            }
            if (0..a).all(|b| model.order(a, b) == sub.order(cand, perm[b])) {
                perm[a] = cand;
                used[cand] = true;
                if place(a + 1, k, sub, model, perm, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }

    place(0, k, sub, model, &mut perm, &mut used).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn preset(name: &str) -> CoxeterMatrix {
        CoxeterMatrix::preset(name).unwrap()
    }

    fn detect(matrix: &CoxeterMatrix, gens: &[usize]) -> SubgroupEmbedding {
        SubgroupEmbedding::detect(matrix, gens.iter().copied().collect()).unwrap()
    }

    #[test]
    fn h3_parabolics() {
        let h3 = preset("H3");
        let a2 = detect(&h3, &[0, 1]);
        assert_eq!(
            a2.model(),
            &ParabolicModel::Classical("A:3".parse().unwrap())
        );
        let pentagon = detect(&h3, &[1, 2]);
        assert_eq!(pentagon.model(), &ParabolicModel::Dihedral(5));
    }

    #[test]
    fn f4_contains_b3_both_ways() {
        let f4 = preset("F4");
        for gens in [[0usize, 1, 2], [1usize, 2, 3]] {
            let embedding = detect(&f4, &gens);
            assert_eq!(
                embedding.model(),
                &ParabolicModel::Classical("B:3".parse().unwrap()),
                "subset {gens:?}"
            );
            // the model's sign generator must sit on the order-4 bond
            let s0 = embedding.relabel()[0];
            let s1 = embedding.relabel()[1];
            assert_eq!(f4.order(s0, s1), 4);
        }
    }

    #[test]
    fn e6_contains_a5_and_d5() {
        let e6 = preset("E6");
        let a5 = detect(&e6, &[0, 2, 3, 4, 5]);
        assert_eq!(
            a5.model(),
            &ParabolicModel::Classical("A:6".parse().unwrap())
        );
        let d5 = detect(&e6, &[1, 2, 3, 4, 5]);
        assert_eq!(
            d5.model(),
            &ParabolicModel::Classical("D:5".parse().unwrap())
        );
    }

    #[test]
    fn explicit_embedding_is_validated() {
        let f4 = preset("F4");
        let subset: GenSet = [1usize, 2, 3].into_iter().collect();
        // the model's sign node must land on the order-4 bond (1,2)
        let good = SubgroupEmbedding::new(
            &f4,
            subset,
            ParabolicModel::Classical("B:3".parse().unwrap()),
            vec![1, 2, 3],
        );
        assert!(good.is_ok());
        let bad = SubgroupEmbedding::new(
            &f4,
            subset,
            ParabolicModel::Classical("B:3".parse().unwrap()),
            vec![3, 2, 1],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn empty_subset_is_trivial() {
        let h3 = preset("H3");
        let e = SubgroupEmbedding::detect(&h3, GenSet::EMPTY).unwrap();
        assert_eq!(e.model(), &ParabolicModel::Trivial);
    }
}
