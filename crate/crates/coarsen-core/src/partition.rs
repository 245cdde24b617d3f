//! Node partitions and disjoint covers feeding the coarsening kernel.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::NodeId;

/// What kind of structure a partition claims to be.
///
/// `Clique` and `Loop` carry a structural claim that can be checked against
/// the source graph (see [`crate::oracle::certify_partition`]). `Arbitrary`
/// marks baseline groups that make no structural claim. The kind tag is
/// metadata only; the coarsening math never looks at it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum PartitionKind {
    Clique,
    Loop,
    Singleton,
    Arbitrary,
}

impl PartitionKind {
    pub fn as_str(self) -> &'static str {
        match self {
            PartitionKind::Clique => "clique",
            PartitionKind::Loop => "loop",
            PartitionKind::Singleton => "singleton",
            PartitionKind::Arbitrary => "arbitrary",
        }
    }
}

impl fmt::Display for PartitionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One group of nodes destined to become a supernode.
///
/// `members` is nonempty. Loop partitions keep their members in canonical
/// cycle order (lowest id first, lexicographically smaller direction);
/// cliques and everything else are sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    pub members: Vec<NodeId>,
    pub kind: PartitionKind,
}

impl Partition {
    pub fn singleton(node: NodeId) -> Self {
        Partition { members: alloc::vec![node], kind: PartitionKind::Singleton }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Errors raised when a list of partitions is not a disjoint cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionError {
    InvalidPartition { reason: String },
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::InvalidPartition { reason } => {
                write!(f, "invalid partition set: {reason}")
            }
        }
    }
}

impl core::error::Error for PartitionError {}

/// Ordered disjoint node groups covering `0..source_nodes` exactly.
///
/// This is precisely the condition making the 0/1 indication matrix valid:
/// one `1` per source-node column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionSet {
    partitions: Vec<Partition>,
    source_nodes: usize,
}

impl PartitionSet {
    /// Validates cover, disjointness and kind arity.
    pub fn new(source_nodes: usize, partitions: Vec<Partition>) -> Result<Self, PartitionError> {
        let mut seen = alloc::vec![false; source_nodes];
        let mut covered = 0usize;
        for (idx, part) in partitions.iter().enumerate() {
            if part.members.is_empty() {
                return Err(PartitionError::InvalidPartition {
                    reason: alloc::format!("partition {idx} is empty"),
                });
            }
            if (part.kind == PartitionKind::Singleton) != (part.members.len() == 1) {
                return Err(PartitionError::InvalidPartition {
                    reason: alloc::format!(
                        "partition {idx} has {} members but kind {}",
                        part.members.len(),
                        part.kind
                    ),
                });
            }
            for &m in &part.members {
                if m as usize >= source_nodes {
                    return Err(PartitionError::InvalidPartition {
                        reason: alloc::format!("node {m} out of range ({source_nodes} nodes)"),
                    });
                }
                if seen[m as usize] {
                    return Err(PartitionError::InvalidPartition {
                        reason: alloc::format!("node {m} appears in more than one partition"),
                    });
                }
                seen[m as usize] = true;
                covered += 1;
            }
        }
        if covered != source_nodes {
            return Err(PartitionError::InvalidPartition {
                reason: alloc::format!("{covered} of {source_nodes} nodes covered"),
            });
        }
        Ok(PartitionSet { partitions, source_nodes })
    }

    /// The identity cover: every node its own singleton.
    pub fn singletons(source_nodes: usize) -> Self {
        PartitionSet {
            partitions: (0..source_nodes as NodeId).map(Partition::singleton).collect(),
            source_nodes,
        }
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn len(&self) -> usize {
        self.partitions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partitions.is_empty()
    }

    pub fn source_nodes(&self) -> usize {
        self.source_nodes
    }

    /// Source node -> partition index. Partition counts share the node id
    /// width, so the map stays compact.
    pub fn mapping(&self) -> Vec<u32> {
        let mut map = alloc::vec![0u32; self.source_nodes];
        for (idx, part) in self.partitions.iter().enumerate() {
            for &m in &part.members {
                map[m as usize] = idx as u32;
            }
        }
        map
    }

    /// Member count of each partition (the diagonal image of the indicator).
    pub fn block_sizes(&self) -> Vec<usize> {
        self.partitions.iter().map(Partition::len).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn part(members: Vec<NodeId>, kind: PartitionKind) -> Partition {
        Partition { members, kind }
    }

    #[test]
    fn accepts_disjoint_cover() {
        let ps = PartitionSet::new(
            4,
            vec![part(vec![0, 1, 2], PartitionKind::Clique), Partition::singleton(3)],
        )
        .unwrap();
        assert_eq!(ps.mapping(), vec![0u32, 0, 0, 1]);
        assert_eq!(ps.block_sizes(), vec![3, 1]);
    }

    #[test]
    fn rejects_overlap_and_gap() {
        let overlap = PartitionSet::new(
            3,
            vec![part(vec![0, 1], PartitionKind::Arbitrary), part(vec![1, 2], PartitionKind::Arbitrary)],
        );
        assert!(overlap.is_err());
        let gap = PartitionSet::new(3, vec![part(vec![0, 1], PartitionKind::Arbitrary)]);
        assert!(gap.is_err());
    }

    #[test]
    fn kind_arity_is_enforced() {
        assert!(PartitionSet::new(1, vec![part(vec![0], PartitionKind::Clique)]).is_err());
        assert!(PartitionSet::new(
            2,
            vec![part(vec![0, 1], PartitionKind::Singleton)]
        )
        .is_err());
    }
}
