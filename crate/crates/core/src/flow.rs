//! Integer max-flow / min-cut (Dinic).

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    rev: usize,
}

/// A directed network with non-negative integer capacities.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    graph: Vec<Vec<Arc>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            graph: vec![Vec::new(); nodes],
            level: vec![-1; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn node_count(&self) -> usize {
        self.graph.len()
    }

    /// Adds an arc `from -> to`. Returns a handle usable with [`Self::set_capacity`].
    pub fn add_arc(&mut self, from: usize, to: usize, cap: i64) -> (usize, usize) {
        debug_assert!(cap >= 0);
        let (rev_from, rev_to) = (self.graph[to].len(), self.graph[from].len());
        self.graph[from].push(Arc { to, cap, rev: rev_from });
        self.graph[to].push(Arc { to: from, cap: 0, rev: rev_to });
        (from, rev_to)
    }

    /// Overwrites the residual capacity of an arc. Only meaningful before any
    /// flow has been pushed.
    pub fn set_capacity(&mut self, handle: (usize, usize), cap: i64) {
        self.graph[handle.0][handle.1].cap = cap;
    }

    /// Zeroes an arc and its residual twin, discarding any flow on it. The
    /// caller must make the arc's tail a source (or otherwise restore
    /// conservation) before augmenting again.
    pub fn remove_arc(&mut self, handle: (usize, usize)) {
        let a = self.graph[handle.0][handle.1];
        self.graph[handle.0][handle.1].cap = 0;
        self.graph[a.to][a.rev].cap = 0;
    }

    fn bfs(&mut self, sources: &[usize]) {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = VecDeque::new();
        for &s in sources {
            self.level[s] = 0;
            queue.push_back(s);
        }
        while let Some(v) = queue.pop_front() {
            for a in &self.graph[v] {
                if a.cap > 0 && self.level[a.to] < 0 {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, source: usize, sink: usize, limit: i64) -> i64 {
        // Iterative DFS along the level graph.
        let mut path: Vec<usize> = Vec::new();
        let mut v = source;
        loop {
            if v == sink {
                let mut f = limit;
                let mut u = source;
                for &idx in &path {
                    let a = self.graph[u][idx];
                    f = f.min(a.cap);
                    u = a.to;
                }
                let mut u = source;
                for &idx in &path {
                    let a = self.graph[u][idx];
                    self.graph[u][idx].cap -= f;
                    self.graph[a.to][a.rev].cap += f;
                    u = a.to;
                }
                return f;
            }
            let mut advanced = false;
            while self.iter[v] < self.graph[v].len() {
                let a = self.graph[v][self.iter[v]];
                if a.cap > 0 && self.level[v] < self.level[a.to] {
                    path.push(self.iter[v]);
                    v = a.to;
                    advanced = true;
                    break;
                }
                self.iter[v] += 1;
            }
            if !advanced {
                // dead end: retreat and skip the arc that led here
                if path.pop().is_none() {
                    return 0;
                }
                self.level[v] = -1;
                v = self.tail_of_path(source, &path);
                self.iter[v] += 1;
            }
        }
    }

    fn tail_of_path(&self, source: usize, path: &[usize]) -> usize {
        path.iter().fold(source, |u, &idx| self.graph[u][idx].to)
    }

    /// Pushes a maximum flow and returns its value.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> i64 {
        self.augment(&[source], sink)
    }

    /// Augments from a set of sources (whose net outflow is unconstrained)
    /// until no residual path reaches `sink`. Returns the flow added.
    pub fn augment(&mut self, sources: &[usize], sink: usize) -> i64 {
        let mut flow = 0;
        loop {
            self.bfs(sources);
            if self.level[sink] < 0 {
                return flow;
            }
            self.iter.iter_mut().for_each(|i| *i = 0);
            for &s in sources {
                loop {
                    let f = self.dfs(s, sink, i64::MAX);
                    if f == 0 {
                        break;
                    }
                    flow += f;
                }
            }
        }
    }

    /// After [`Self::max_flow`]: nodes reachable from `source` in the
    /// residual network, i.e. the source side of the inclusion-minimal
    /// minimum cut.
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        self.reachable(&[source])
    }

    /// Nodes reachable from any of `sources` in the residual network.
    pub fn reachable(&self, sources: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.graph.len()];
        for &s in sources {
            seen[s] = true;
        }
        let mut stack = sources.to_vec();
        while let Some(v) = stack.pop() {
            for a in &self.graph[v] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}
