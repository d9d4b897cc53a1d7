use crate::coloring::{Class, Coloring};
use crate::graph::{VertexId, WeightedMultigraph};

/// How a removed vertex `u` is put back into the child's coloring.
#[derive(Clone, Debug)]
pub(crate) enum Extension {
    /// `u` takes the class not used by `x`.
    Opposite { u: VertexId, x: VertexId },
    Fixed { u: VertexId, class: Class },
    /// Degree two: `u` avoids `crowded` only if both neighbors are there.
    DegreeTwo {
        u: VertexId,
        x: VertexId,
        y: VertexId,
        crowded: Class,
    },
    /// `u` joins the minority class of its three neighbors, after moving
    /// at most one neighbor into the majority class.
    Majority { u: VertexId, xs: [VertexId; 3] },
    /// The child carried the edge `x2x3` in place of the path through `u`.
    Bridged {
        u: VertexId,
        x1: VertexId,
        x2: VertexId,
        x3: VertexId,
    },
}

impl Extension {
    /// Extends `c` to a coloring of `g`. Returns the vertex moved by a flip,
    /// if any.
    pub fn apply(&self, g: &WeightedMultigraph, mut c: Coloring) -> (Coloring, Option<VertexId>) {
        let class_of = |c: &Coloring, v: VertexId| c.get(v).expect("neighbor colored by child");
        let mut flipped = None;
        match *self {
            Extension::Opposite { u, x } => {
                let k = class_of(&c, x).other();
                c.assign(u, k);
            }
            Extension::Fixed { u, class } => {
                c.assign(u, class);
            }
            Extension::DegreeTwo { u, x, y, crowded } => {
                let both = class_of(&c, x) == crowded && class_of(&c, y) == crowded;
                c.assign(u, if both { crowded.other() } else { crowded });
            }
            Extension::Majority { u, xs } => {
                flipped = majority_with_flip(g, &mut c, u, xs);
            }
            Extension::Bridged { u, x1, x2, x3 } => {
                if class_of(&c, x2) == class_of(&c, x3) {
                    // the path x2-u-x3 stands in for the monochromatic x2x3
                    let k = class_of(&c, x1).other();
                    c.assign(u, k);
                } else {
                    flipped = majority_with_flip(g, &mut c, u, [x1, x2, x3]);
                }
            }
        }
        (c, flipped)
    }
}

/// With `j` the class held by at least two of `xs`: move the first `x_i`
/// outside `V_j` that has room in `j` and no neighbor in `V_j`, then put `u`
/// in the other class.
fn majority_with_flip(
    g: &WeightedMultigraph,
    c: &mut Coloring,
    u: VertexId,
    xs: [VertexId; 3],
) -> Option<VertexId> {
    let ones = xs.iter().filter(|&&x| c.get(x) == Some(Class::One)).count();
    let j = if ones >= 2 { Class::One } else { Class::Two };
    let candidate = xs.iter().copied().find(|&x| {
        c.get(x) != Some(j)
            && g.cap(x, j) > 0
            && g
                .neighbors(x)
                .all(|(y, _)| y == u || c.get(y) != Some(j))
    });
    if let Some(x) = candidate {
        c.assign(x, j);
    }
    c.assign(u, j.other());
    candidate
}
