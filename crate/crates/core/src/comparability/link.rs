use crate::error::{Error, Result};
use crate::hypercore::{Digraph, Hypergraph3, Link, OrientedHypergraph3, Vertex};
use crate::solvers::{graph_chi, graph_omega, Coloring, Solver};

/// Link of a vertex in an oriented hypergraph, each link edge `{u, w}`
/// directed `u -> w` when `(v u w)` is an oriented edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedLink {
    pub link: Link,
    pub digraph: Digraph,
}

/// Orients the link of `v`. For a transitive input the result is a strict
/// partial order, so the link is a comparability graph.
pub fn link_orientation(oh: &OrientedHypergraph3, v: Vertex) -> Result<OrientedLink> {
    oh.require_transitive()?;
    let link = oh.underlying().link(v)?;
    let arcs: Vec<(Vertex, Vertex)> = link
        .graph
        .edges()
        .map(|(a, b)| {
            if oh.contains_reading(v, link.host(a), link.host(b)) {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    let digraph = Digraph::from_arcs(link.graph.order(), arcs)?;
    Ok(OrientedLink { link, digraph })
}

/// Colors the underlying graph of a transitive acyclic digraph by longest
/// chain ending at each vertex. Uses exactly as many colors as the longest
/// chain, which is the clique number of the comparability graph.
pub fn color_comparability_graph(d: &Digraph) -> Result<Coloring> {
    let order = d.topological_order().ok_or(Error::Cyclic)?;
    let mut preds = vec![Vec::new(); d.order() + 1];
    for (u, w) in d.arcs() {
        preds[w].push(u);
    }
    let mut level = vec![0usize; d.order() + 1];
    for v in order {
        level[v] = 1 + preds[v].iter().map(|&u| level[u]).max().unwrap_or(0);
    }
    let k = level.iter().copied().max().unwrap_or(0);
    Coloring::new(k, level[1..].to_vec())
}

/// Bounds on an even hypergraph read off the link of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinkBoundReport {
    pub vertex: Vertex,
    pub chi_link: usize,
    pub omega_link: usize,
    /// `χ(H) ≤ chi_link`.
    pub chi_h_upper: usize,
    /// `ω(H) ≥ omega_link + 1`.
    pub omega_h_lower: usize,
}

fn require_even(h: &Hypergraph3) -> Result<()> {
    match h.even_violation() {
        Some(four) => Err(Error::NotEven(four)),
        None => Ok(()),
    }
}

/// Exact χ and ω of the link of `v` and the bounds they give on `h`.
///
/// A vertex in no edge has an empty link; its χ is reported as 1, the one
/// class that the coloring extension still needs for the rest of `h`.
pub fn link_bounds(h: &Hypergraph3, v: Vertex, solver: &Solver) -> Result<LinkBoundReport> {
    require_even(h)?;
    let link = h.link(v)?;
    let (chi_link, _) = graph_chi(&link.graph, solver)?;
    let (omega_link, _) = graph_omega(&link.graph, solver)?;
    let chi_link = chi_link.max(1);
    Ok(LinkBoundReport {
        vertex: v,
        chi_link,
        omega_link,
        chi_h_upper: chi_link,
        omega_h_lower: omega_link + 1,
    })
}

/// Extends a proper coloring of the link of `v` (in link labels) to all of
/// `h`: link vertices keep their color, everything else gets the top color.
pub fn extend_coloring_via_link(h: &Hypergraph3, v: Vertex, link_coloring: &Coloring) -> Result<Coloring> {
    require_even(h)?;
    let link = h.link(v)?;
    if link_coloring.order() != link.graph.order() {
        return Err(Error::InvalidParameter(format!(
            "link coloring has {} vertices, link has {}",
            link_coloring.order(),
            link.graph.order()
        )));
    }
    if let Some((a, b)) = link
        .graph
        .edges()
        .find(|&(a, b)| link_coloring.color(a) == link_coloring.color(b))
    {
        return Err(Error::ImproperColoring(v, link.host(a), link.host(b)));
    }
    let k = link_coloring.k().max(1);
    let colors = (1..=h.order())
        .map(|u| link.local(u).map_or(k, |i| link_coloring.color(i)))
        .collect();
    Coloring::new(k, colors)
}
