use crate::error::{Error, Result};

/// A permutation of the vertices of a graph together with its inverse.
///
/// Positions are stored 0-based; `position(v) + 1` is the 1-based σ(v).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrdering {
    order: Vec<usize>,
    position: Vec<usize>,
}

impl VertexOrdering {
    /// Checks that `order` is a permutation of `0..vertex_count`.
    pub fn new(vertex_count: usize, order: Vec<usize>) -> Result<Self> {
        if order.len() != vertex_count {
            return Err(Error::NotPermutation {
                expected: vertex_count,
                reason: format!("length {} differs", order.len()),
            });
        }
        let mut position = vec![usize::MAX; vertex_count];
        for (i, &v) in order.iter().enumerate() {
            if v >= vertex_count {
                return Err(Error::NotPermutation {
                    expected: vertex_count,
                    reason: format!("vertex {v} out of range"),
                });
            }
            if position[v] != usize::MAX {
                return Err(Error::NotPermutation {
                    expected: vertex_count,
                    reason: format!("vertex {v} repeated"),
                });
            }
            position[v] = i;
        }
        Ok(VertexOrdering { order, position })
    }

    pub fn identity(vertex_count: usize) -> Self {
        VertexOrdering {
            order: (0..vertex_count).collect(),
            position: (0..vertex_count).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.order
    }

    /// 0-based position of `v`.
    pub fn position(&self, v: usize) -> usize {
        self.position[v]
    }

    pub fn positions(&self) -> &[usize] {
        &self.position
    }

    /// `u ≺ v` in this ordering.
    pub fn precedes(&self, u: usize, v: usize) -> bool {
        self.position[u] < self.position[v]
    }

    pub fn first(&self) -> Option<usize> {
        self.order.first().copied()
    }

    /// The end-vertex of the ordering.
    pub fn last(&self) -> Option<usize> {
        self.order.last().copied()
    }

    pub fn reversed(&self) -> Self {
        let n = self.order.len();
        VertexOrdering {
            order: self.order.iter().rev().copied().collect(),
            position: self.position.iter().map(|&p| n - 1 - p).collect(),
        }
    }
}
