use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::game::{Priority, VertexId};

/// Order in which incomplete vertices are expanded.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum ExplorationStrategy {
    #[default]
    Bfs,
    Dfs,
    /// Uniformly random incomplete vertex, reproducible from the seed.
    RandomFrontier(u64),
    /// Lowest priority first; ties broken by discovery order.
    LowestPriorityFirst,
}

impl ExplorationStrategy {
    pub const NAMES: [&'static str; 4] = ["bfs", "dfs", "random", "lowprio"];

    /// The strategy called `name`; `seed` is used by `random` only.
    pub fn from_name(name: &str, seed: u64) -> Option<Self> {
        Some(match name {
            "bfs" => ExplorationStrategy::Bfs,
            "dfs" => ExplorationStrategy::Dfs,
            "random" => ExplorationStrategy::RandomFrontier(seed),
            "lowprio" => ExplorationStrategy::LowestPriorityFirst,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            ExplorationStrategy::Bfs => "bfs",
            ExplorationStrategy::Dfs => "dfs",
            ExplorationStrategy::RandomFrontier(_) => "random",
            ExplorationStrategy::LowestPriorityFirst => "lowprio",
        }
    }
}

impl fmt::Display for ExplorationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ExplorationStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::from_name(s, 0).ok_or_else(|| format!("unknown strategy `{s}`"))
    }
}

/// The incomplete vertices waiting to be expanded.
#[allow(clippy::large_enum_variant)]
pub(crate) enum Frontier {
    Queue(VecDeque<VertexId>),
    Stack(Vec<VertexId>),
    Random(Vec<VertexId>, ChaCha8Rng),
    Priority(BinaryHeap<Reverse<(Priority, u64, VertexId)>>, u64),
}

impl Frontier {
    pub(crate) fn new(strategy: ExplorationStrategy) -> Self {
        match strategy {
            ExplorationStrategy::Bfs => Frontier::Queue(VecDeque::new()),
            ExplorationStrategy::Dfs => Frontier::Stack(Vec::new()),
            ExplorationStrategy::RandomFrontier(seed) => {
                Frontier::Random(Vec::new(), ChaCha8Rng::seed_from_u64(seed))
            }
            ExplorationStrategy::LowestPriorityFirst => Frontier::Priority(BinaryHeap::new(), 0),
        }
    }

    pub(crate) fn push(&mut self, v: VertexId, priority: Priority) {
        match self {
            Frontier::Queue(q) => q.push_back(v),
            Frontier::Stack(s) => s.push(v),
            Frontier::Random(items, _) => items.push(v),
            Frontier::Priority(heap, seq) => {
                heap.push(Reverse((priority, *seq, v)));
                *seq += 1;
            }
        }
    }

    pub(crate) fn pop(&mut self) -> Option<VertexId> {
        match self {
            Frontier::Queue(q) => q.pop_front(),
            Frontier::Stack(s) => s.pop(),
            Frontier::Random(items, rng) => {
                if items.is_empty() {
                    None
                } else {
                    let i = rng.gen_range(0..items.len());
                    Some(items.swap_remove(i))
                }
            }
            Frontier::Priority(heap, _) => heap.pop().map(|Reverse((_, _, v))| v),
        }
    }

    pub(crate) fn is_empty(&self) -> bool {
        match self {
            Frontier::Queue(q) => q.is_empty(),
            Frontier::Stack(s) => s.is_empty(),
            Frontier::Random(items, _) => items.is_empty(),
            Frontier::Priority(heap, _) => heap.is_empty(),
        }
    }
}
