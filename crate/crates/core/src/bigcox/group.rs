use std::collections::HashMap;
use std::sync::Arc;

use crate::bigcox::{CoxeterMatrix, GenericElement, ParabolicModel, SubgroupEmbedding};
use crate::enumerate::Splittable;
use crate::error::{Error, Result};
use crate::groups::{GenSet, SignedPermutation};
use crate::statistics::{self, Statistic};

/// Default enumeration budget: sized for the largest desk-scale group
/// (51840 elements); the two biggest presets are refused unless raised.
pub const DEFAULT_ENUM_CAP: u64 = 60_000;

/// A finite Coxeter group enumerated by breadth-first closure under right
/// multiplication. Indices are BFS discovery order (generators in ascending
/// order within a layer), so index 0 is the identity and length equals BFS
/// depth.
pub struct EnumeratedGroup {
    matrix: CoxeterMatrix,
    lengths: Vec<u32>,
    /// Flattened successor table: `right[i * rank + s]` is the index of
    /// `w_i s`.
    right: Vec<u32>,
    longest: u32,
}

/// Enumerates the group of `matrix`, refusing to grow past `cap` elements.
pub fn enumerate_group(matrix: &CoxeterMatrix, cap: u64) -> Result<EnumeratedGroup> {
    let generators = matrix.generator_matrices()?;
    let rank = matrix.size();
    let identity = GenericElement::identity(rank);
    let mut index: HashMap<GenericElement, u32> = HashMap::new();
    index.insert(identity.clone(), 0);
    let mut elements = vec![identity];
    let mut lengths = vec![0u32];
    let mut right: Vec<u32> = Vec::new();
    let mut head = 0usize;
    while head < elements.len() {
        for generator in &generators {
            let successor = elements[head].compose(generator);
            let slot = match index.get(&successor) {
                Some(&i) => i,
                None => {
                    if elements.len() as u64 >= cap {
                        return Err(Error::CapExceeded {
                            what: format!("group on {rank} generators"),
                            needed: format!("more than {}", elements.len()),
                            cap,
                        });
                    }
                    let i = elements.len() as u32;
                    index.insert(successor.clone(), i);
                    elements.push(successor);
                    lengths.push(lengths[head] + 1);
                    i
                }
            };
            right.push(slot);
        }
        head += 1;
    }
    let max_length = *lengths.iter().max().unwrap();
    let longest: Vec<u32> = (0..lengths.len() as u32)
        .filter(|&i| lengths[i as usize] == max_length)
        .collect();
    debug_assert_eq!(longest.len(), 1, "finite groups have a unique top");
    Ok(EnumeratedGroup {
        matrix: matrix.clone(),
        lengths,
        right,
        longest: longest[0],
    })
}

impl EnumeratedGroup {
    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.size()
    }

    pub fn order(&self) -> u64 {
        self.lengths.len() as u64
    }

    pub fn length(&self, element: u64) -> u64 {
        self.lengths[element as usize] as u64
    }

    pub fn longest_index(&self) -> u64 {
        self.longest as u64
    }

    pub fn longest_length(&self) -> u64 {
        self.length(self.longest as u64)
    }

    pub fn right_mul(&self, element: u64, generator: usize) -> u64 {
        self.right[element as usize * self.rank() + generator] as u64
    }

    pub fn is_right_descent(&self, element: u64, generator: usize) -> bool {
        self.length(self.right_mul(element, generator)) < self.length(element)
    }

    pub fn right_descents(&self, element: u64) -> GenSet {
        (0..self.rank())
            .filter(|&s| self.is_right_descent(element, s))
            .collect()
    }

    /// Factors `w = w^J w_J` by stripping right descents in `subset`;
    /// returns the quotient index and the strip word (first-stripped
    /// generator first, so `w_J` is the reversed product). The word is
    /// reduced: its length is the length of `w_J`.
    pub fn decompose(&self, element: u64, subset: GenSet) -> (u64, Vec<usize>) {
        let mut quotient = element;
        let mut word = Vec::new();
        loop {
            let next = (0..self.rank())
                .find(|&s| subset.contains(s) && self.is_right_descent(quotient, s));
            match next {
                None => break,
                Some(s) => {
                    quotient = self.right_mul(quotient, s);
                    word.push(s);
                }
            }
        }
        (quotient, word)
    }
}

impl Splittable for EnumeratedGroup {
    type Elem = u64;

    fn len(&self) -> u64 {
        self.order()
    }

    fn scan(&self, start: u64, end: u64, visit: &mut dyn FnMut(&u64)) {
        for i in start..end {
            visit(&i);
        }
    }
}

/// A named statistic on an enumerated group, evaluated by element index.
#[derive(Clone)]
pub struct GenericStatistic {
    name: String,
    group: Arc<EnumeratedGroup>,
    kind: Kind,
}

#[derive(Clone)]
enum Kind {
    Length,
    Induced {
        subset: GenSet,
        /// Model generator index for each big-group generator in the subset.
        model_generator: HashMap<usize, usize>,
        /// `None` evaluates the base length through the strip word.
        base: Option<Statistic>,
    },
}

impl GenericStatistic {
    pub fn length(group: Arc<EnumeratedGroup>) -> Self {
        GenericStatistic {
            name: "len".to_string(),
            group,
            kind: Kind::Length,
        }
    }

    /// The statistic induced from `base` on the parabolic subgroup of
    /// `embedding`: `w` maps to `len(w^J) + base(w_J)`. A `None` base is
    /// the length of the subgroup, usable for any model (it is the only
    /// named statistic on a dihedral parabolic). Classical bases are
    /// validated to lie in the length class of their model group.
    pub fn induced(
        group: Arc<EnumeratedGroup>,
        embedding: &SubgroupEmbedding,
        base: Option<Statistic>,
    ) -> Result<Self> {
        let base_name = match (&base, embedding.model()) {
            (None, _) => "len".to_string(),
            (Some(stat), ParabolicModel::Classical(model)) => {
                if stat.descriptor() != *model {
                    return Err(Error::DescriptorMismatch(stat.descriptor(), *model));
                }
                if !statistics::in_length_class(stat)? {
                    return Err(Error::NotInClass(format!(
                        "`{}` is not in the length class of {}",
                        stat.name(),
                        model
                    )));
                }
                stat.name().to_string()
            }
            (Some(stat), _) => {
                return Err(Error::Unsupported(format!(
                    "`{}` cannot be evaluated on a non-classical parabolic model",
                    stat.name()
                )));
            }
        };
        let mut model_generator = HashMap::new();
        for (p, &big) in embedding.relabel().iter().enumerate() {
            model_generator.insert(big, embedding.model_generator_index(p));
        }
        let name = format!(
            "induced:{}:{}:right",
            base_name,
            display_nodes_1based(embedding.subset())
        );
        Ok(GenericStatistic {
            name,
            group,
            kind: Kind::Induced {
                subset: embedding.subset(),
                model_generator,
                base,
            },
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn group(&self) -> &Arc<EnumeratedGroup> {
        &self.group
    }

    pub fn eval(&self, element: u64) -> i64 {
        match &self.kind {
            Kind::Length => self.group.length(element) as i64,
            Kind::Induced {
                subset,
                model_generator,
                base,
            } => {
                let (quotient, word) = self.group.decompose(element, *subset);
                let quotient_length = self.group.length(quotient) as i64;
                match base {
                    None => quotient_length + word.len() as i64,
                    Some(stat) => {
                        let mut tail = SignedPermutation::identity(stat.descriptor());
                        for &g in &word {
                            tail.left_mul_gen(model_generator[&g]);
                        }
                        quotient_length + stat.eval(&tail)
                    }
                }
            }
        }
    }

    /// Registry lookup: `len` or `induced:<base>:<J>:right`, with the
    /// parabolic model detected from the diagram.
    pub fn resolve(group: &Arc<EnumeratedGroup>, name: &str) -> Result<Self> {
        if name == "len" {
            return Ok(GenericStatistic::length(group.clone()));
        }
        let rest = name
            .strip_prefix("induced:")
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))?;
        let (rest, side) = rest
            .rsplit_once(':')
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))?;
        if side == "left" {
            return Err(Error::Unsupported(
                "left induction is not available on the generic engine".to_string(),
            ));
        }
        if side != "right" {
            return Err(Error::Parse(format!("unknown side `{side}`")));
        }
        let (base_name, j_text) = rest
            .rsplit_once(':')
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))?;
        let subset = parse_nodes_1based(j_text)?;
        let embedding = SubgroupEmbedding::detect(group.matrix(), subset)?;
        let base = match (base_name, embedding.model()) {
            ("len", _) => None,
            (_, ParabolicModel::Classical(model)) => Some(Statistic::resolve(*model, base_name)?),
            (other, _) => {
                return Err(Error::Unsupported(format!(
                    "statistic `{other}` is not defined on a non-classical parabolic"
                )))
            }
        };
        GenericStatistic::induced(group.clone(), &embedding, base)
    }
}

/// Generators of a generic group are named `s1..sk` (1-based), while
/// diagram nodes are indexed from 0; these convert between the two.
pub fn parse_nodes_1based(text: &str) -> Result<GenSet> {
    let named = GenSet::parse(text)?;
    if named.contains(0) {
        return Err(Error::Parse(
            "generic-group generators are numbered from s1".to_string(),
        ));
    }
    Ok(named.iter().map(|i| i - 1).collect())
}

pub fn display_nodes_1based(nodes: GenSet) -> String {
    nodes.iter().map(|i| i + 1).collect::<GenSet>().to_string()
}
