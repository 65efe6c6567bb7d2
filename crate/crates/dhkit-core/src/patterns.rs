//! The small named graphs the recognizers and certificates revolve around.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Path on four vertices 0-1-2-3.
pub fn p4() -> Graph {
    Graph::path(4)
}

/// Path on five vertices 0-1-2-3-4.
pub fn p5() -> Graph {
    Graph::path(5)
}

/// The bull: triangle 1,2,3 with pendant 0 attached to 1 and pendant 4
/// attached to 3. Self-complementary, and the largest prime graph whose
/// complement shares all its structure.
pub fn bull() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)])
}

/// Induced 5-cycle.
pub fn c5() -> Graph {
    Graph::cycle(5)
}

/// The house: 4-cycle 0-1-2-3 with a roof vertex 4 adjacent to 0 and 1.
/// Isomorphic to the complement of P5.
pub fn house() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)])
}

/// The gem: P4 rim 0-1-2-3 plus a universal vertex 4.
pub fn gem() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])
}

/// The co-gem: P4 on 0-1-2-3 plus the isolated vertex 4. Complement of the gem.
pub fn co_gem() -> Graph {
    Graph::from_edges(5, [(0, 1), (1, 2), (2, 3)])
}

/// The domino: two 4-cycles sharing the edge 1-4
/// (equivalently C6 0-1-2-3-4-5 plus the chord 1-4).
pub fn domino() -> Graph {
    Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)])
}

/// Induced cycle of length `k`, `k >= 5`.
pub fn hole(k: usize) -> Graph {
    assert!(k >= 5, "holes have length at least 5");
    Graph::cycle(k)
}

/// The five minimal graphs whose absence characterises membership in the
/// complement-closed distance-hereditary class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    C5,
    House,
    P5,
    Gem,
    CoGem,
}

impl Obstruction {
    /// Search order used by the certificate producer.
    pub const ALL: [Obstruction; 5] = [
        Obstruction::C5,
        Obstruction::House,
        Obstruction::P5,
        Obstruction::Gem,
        Obstruction::CoGem,
    ];

    pub fn graph(self) -> Graph {
        match self {
            Obstruction::C5 => c5(),
            Obstruction::House => house(),
            Obstruction::P5 => p5(),
            Obstruction::Gem => gem(),
            Obstruction::CoGem => co_gem(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Obstruction::C5 => "C5",
            Obstruction::House => "House",
            Obstruction::P5 => "P5",
            Obstruction::Gem => "Gem",
            Obstruction::CoGem => "CoGem",
        }
    }
}

impl std::fmt::Display for Obstruction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
