use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::groups::{GenSet, GroupDescriptor, SignedPermutation};

/// Word-length and reflection data for a small group, built by breadth-first
/// closure over the Cayley graph. Everything here is independent of the
/// window formulas for length and descents, so it can arbitrate them.
pub struct BruteForceTable {
    descriptor: GroupDescriptor,
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
    word_length: Vec<u64>,
    reflections: Vec<SignedPermutation>,
}

impl BruteForceTable {
    /// Enumerates the whole group; refuses orders above `cap`.
    pub fn new(descriptor: GroupDescriptor, cap: u64) -> Result<Self> {
        let order = descriptor.order_u64()?;
        if order > cap {
            return Err(Error::CapExceeded {
                what: descriptor.to_string(),
                needed: order.to_string(),
                cap,
            });
        }
        let mut elements = vec![SignedPermutation::identity(descriptor)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut word_length = vec![0u64];
        let mut head = 0;
        while head < elements.len() {
            let w = elements[head].clone();
            let len = word_length[head];
            for s in descriptor.generator_indices() {
                let mut ws = w.clone();
                ws.right_mul_gen(s);
                if !index.contains_key(&ws) {
                    index.insert(ws.clone(), elements.len());
                    elements.push(ws);
                    word_length.push(len + 1);
                }
            }
            head += 1;
        }
        debug_assert_eq!(elements.len() as u64, order);

        // T = { u s u^{-1} } over all u and all generators
        let mut reflections = Vec::new();
        let mut seen = HashMap::new();
        for u in &elements {
            let u_inv = u.inverse();
            for s in descriptor.generator_indices() {
                let gen = SignedPermutation::generator(descriptor, s)?;
                let t = u.compose(&gen)?.compose(&u_inv)?;
                if !seen.contains_key(&t) {
                    seen.insert(t.clone(), ());
                    reflections.push(t);
                }
            }
        }
        Ok(BruteForceTable {
            descriptor,
            elements,
            index,
            word_length,
            reflections,
        })
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn reflections(&self) -> &[SignedPermutation] {
        &self.reflections
    }

    /// Word length = BFS depth in the Cayley graph.
    pub fn word_length_of(&self, w: &SignedPermutation) -> u64 {
        self.word_length[self.index[w]]
    }

    /// The set `T(w)` of reflections `t` with `l(wt) < l(w)`, with lengths
    /// taken from the BFS table.
    pub fn t_set(&self, w: &SignedPermutation) -> Vec<SignedPermutation> {
        let lw = self.word_length_of(w);
        self.reflections
            .iter()
            .filter(|t| self.word_length_of(&w.compose(t).unwrap()) < lw)
            .cloned()
            .collect()
    }

    /// Reflection-counting length: `|T(w)|`.
    pub fn reflection_length(&self, w: &SignedPermutation) -> u64 {
        self.t_set(w).len() as u64
    }

    /// Membership of `t` in the parabolic subgroup generated by `subset`,
    /// decided by factoring: `t` lies in `W_J` iff its quotient part is
    /// trivial.
    pub fn lies_in_parabolic(&self, t: &SignedPermutation, subset: GenSet) -> bool {
        crate::groups::parabolic_decompose(t, subset)
            .map(|f| f.quotient().is_identity())
            .unwrap_or(false)
    }
}

/// Counts `|T(w)|` by brute force over all reflections of the group of `w`.
/// Equals the Coxeter length; used as an independent oracle for `length`.
pub fn reflection_length_oracle(w: &SignedPermutation, cap: u64) -> Result<u64> {
    let table = BruteForceTable::new(w.descriptor(), cap)?;
    Ok(table.reflection_length(w))
}
