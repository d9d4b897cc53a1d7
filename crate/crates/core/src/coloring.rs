use alloc::collections::BTreeMap;
use core::fmt;

use crate::graph::VertexId;

/// One of the two forest classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    One,
    Two,
}

impl Class {
    pub const BOTH: [Class; 2] = [Class::One, Class::Two];

    pub fn other(self) -> Class {
        match self {
            Class::One => Class::Two,
            Class::Two => Class::One,
        }
    }

    /// 1 or 2.
    pub fn number(self) -> u8 {
        match self {
            Class::One => 1,
            Class::Two => 2,
        }
    }

    pub fn from_number(n: u8) -> Option<Class> {
        match n {
            1 => Some(Class::One),
            2 => Some(Class::Two),
            _ => None,
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

/// Assignment of vertices to classes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coloring {
    assignment: BTreeMap<VertexId, Class>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(&mut self, v: VertexId, class: Class) -> Option<Class> {
        self.assignment.insert(v, class)
    }

    pub fn get(&self, v: VertexId) -> Option<Class> {
        self.assignment.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Vertices in increasing id order with their class.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, Class)> + '_ {
        self.assignment.iter().map(|(&v, &c)| (v, c))
    }

    pub fn class_members(&self, class: Class) -> impl Iterator<Item = VertexId> + '_ {
        self.iter().filter(move |&(_, c)| c == class).map(|(v, _)| v)
    }

    /// Adds every assignment of `other`, overriding on conflicts.
    pub fn absorb(&mut self, other: Coloring) {
        self.assignment.extend(other.assignment);
    }
}

impl FromIterator<(VertexId, Class)> for Coloring {
    fn from_iter<I: IntoIterator<Item = (VertexId, Class)>>(iter: I) -> Self {
        Coloring {
            assignment: iter.into_iter().collect(),
        }
    }
}
