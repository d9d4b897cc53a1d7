use alloc::vec::Vec;

/// Union-find with union by size and no path compression, so that unions
/// can be undone in LIFO order.
#[derive(Clone, Debug)]
pub(crate) struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<Option<(usize, usize)>>,
}

impl RollbackDsu {
    pub fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
            history: Vec::new(),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already
    /// joined. Always records one history entry.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.history.push(None);
            return false;
        }
        if self.size[ra] < self.size[rb] {
            core::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(Some((ra, rb)));
        true
    }

    pub fn checkpoint(&self) -> usize {
        self.history.len()
    }

    pub fn rollback(&mut self, checkpoint: usize) {
        while self.history.len() > checkpoint {
            if let Some((ra, rb)) = self.history.pop().flatten() {
                self.parent[rb] = rb;
                self.size[ra] -= self.size[rb];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_and_rollback() {
        let mut d = RollbackDsu::new(5);
        let cp = d.checkpoint();
        assert!(d.union(0, 1));
        assert!(d.union(1, 2));
        assert!(!d.union(0, 2));
        assert_eq!(d.find(0), d.find(2));
        let mid = d.checkpoint();
        assert!(d.union(3, 4));
        d.rollback(mid);
        assert_ne!(d.find(3), d.find(4));
        assert_eq!(d.find(0), d.find(2));
        d.rollback(cp);
        assert_ne!(d.find(0), d.find(1));
    }
}
