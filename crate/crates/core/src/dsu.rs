use alloc::vec::Vec;

/// Union-find with union by size. `undo` rolls back the most recent
/// successful `union`, which the backtracking searches rely on; there is no
/// path compression so that rollback stays exact.
#[derive(Debug, Clone)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<(usize, usize)>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
            history: Vec::new(),
        }
    }

    pub(crate) fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push((ra, rb));
        true
    }

    pub(crate) fn undo(&mut self) {
        if let Some((ra, rb)) = self.history.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }

    /// Dense class labels `0..k` numbered by smallest member.
    pub(crate) fn labels(&self) -> (Vec<usize>, usize) {
        let n = self.parent.len();
        let mut root_label = alloc::vec![usize::MAX; n];
        let mut labels = alloc::vec![0; n];
        let mut next = 0;
        for (v, label) in labels.iter_mut().enumerate() {
            let r = self.find(v);
            if root_label[r] == usize::MAX {
                root_label[r] = next;
                next += 1;
            }
            *label = root_label[r];
        }
        (labels, next)
    }
}
