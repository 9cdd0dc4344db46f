use super::{Group, GroupError, Subgroup};

/// The projection `G → G/N` together with the quotient group.
///
/// Cosets are numbered in increasing order of their least element, so the
/// identity coset is index 0 and the quotient's element `q` is represented
/// by `rep(q)`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    kernel: Subgroup,
    image: Group,
    proj: Vec<u32>,
    reps: Vec<usize>,
}

impl QuotientMap {
    pub fn new(g: &Group, kernel: &Subgroup) -> Result<QuotientMap, GroupError> {
        if !kernel.is_normal() {
            return Err(GroupError::NotNormal);
        }
        let n = g.order();
        let mut proj = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for a in 0..n {
            if proj[a] != u32::MAX {
                continue;
            }
            let coset = reps.len() as u32;
            reps.push(a);
            for k in kernel.elements() {
                proj[g.mul(a, k)] = coset;
            }
        }
        let m = reps.len();
        let mut mul = vec![0u32; m * m];
        for (x, &ra) in reps.iter().enumerate() {
            for (y, &rb) in reps.iter().enumerate() {
                mul[x * m + y] = proj[g.mul(ra, rb)];
            }
        }
        let image = Group::from_trusted_table(format!("{} / N{}", g.name(), kernel.order()), m, mul);
        Ok(QuotientMap {
            kernel: kernel.clone(),
            image,
            proj,
            reps,
        })
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn image(&self) -> &Group {
        &self.image
    }

    pub fn project(&self, a: usize) -> usize {
        self.proj[a] as usize
    }

    /// Least element of the coset `q`.
    pub fn rep(&self, q: usize) -> usize {
        self.reps[q]
    }

    /// Image of a subgroup containing the kernel, as a set of quotient
    /// elements in increasing order.
    pub fn project_set(&self, h: &Subgroup) -> Vec<usize> {
        let mut out: Vec<usize> = h.elements().map(|a| self.project(a)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Full preimage of a set of quotient elements.
    pub fn preimage(&self, g: &Group, image_elements: &Subgroup) -> Subgroup {
        Subgroup::from_closed_set(g, {
            let mut bits = fixedbitset::FixedBitSet::with_capacity(g.order());
            for a in g.elements() {
                if image_elements.contains(self.project(a)) {
                    bits.insert(a);
                }
            }
            bits
        })
    }
}
