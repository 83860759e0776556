//! The parameter grids every theorem is checked on.

use crate::families;
use crate::hypergraph::Hypergraph;

use super::{Instance, Theorem};

fn regular(name: &str, hypergraph: Hypergraph) -> Instance {
    Instance::Regular {
        name: name.into(),
        hypergraph,
    }
}

/// Grid points for one theorem, in a fixed order.
pub fn grid(theorem: Theorem) -> Vec<Instance> {
    let mut out = Vec::new();
    match theorem {
        Theorem::T1 => {
            for k in 2..=6 {
                let edge = Hypergraph::new(k, vec![(0..k).collect()]).expect("single edge");
                out.push(regular(&format!("edge:k={k}"), edge));
            }
            out.push(regular("fano", families::fano_plane()));
            out.push(regular(
                "complete_uniform:n=4,k=3",
                families::complete_uniform(4, 3).expect("K4(3)"),
            ));
            for n in 4..=8 {
                out.push(regular(&format!("cycle:{n}"), families::cycle_graph(n).expect("cycle")));
            }
        }
        Theorem::T2 => {
            let mut bases: Vec<String> = (3..=6).map(|n| format!("cycle:{n}")).collect();
            bases.push("petersen".into());
            bases.push("complete:5".into());
            for name in bases {
                let base = families::named_graph(&name).expect("named graph");
                for k in 3..=5 {
                    out.push(Instance::GraphPower {
                        name: name.clone(),
                        base: base.clone(),
                        k,
                    });
                }
            }
        }
        Theorem::T3 => {
            for l in 1..=6 {
                for s in 1..=3 {
                    for t in 1..=4 {
                        out.push(Instance::Hyperflower { l, s, t });
                    }
                }
            }
        }
        Theorem::T4 => {
            for l in 1..=6 {
                for k in 2..=5 {
                    out.push(Instance::Hyperstar { l, k });
                }
            }
        }
        Theorem::T5 => {
            for l in 3..=6 {
                for s in 1..=2 {
                    for t in 1..=3 {
                        out.push(Instance::PetalOverlapped { l, s, t });
                    }
                }
            }
        }
        Theorem::T6 => out.extend((2..=6).map(|k| Instance::SquidLike { k })),
    }
    out
}

/// Every grid point of every theorem.
pub fn full_grid() -> Vec<Instance> {
    Theorem::ALL.into_iter().flat_map(grid).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let sizes: Vec<usize> = Theorem::ALL.into_iter().map(|t| grid(t).len()).collect();
        assert_eq!(sizes, vec![12, 18, 72, 24, 24, 5]);
        assert!(full_grid().iter().all(|i| i.subdivision_order().is_ok()));
    }
}
