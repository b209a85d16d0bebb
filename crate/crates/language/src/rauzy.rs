use crate::{FactorLanguage, LanguageError};
use subshift_core::Letter;

/// The order-`n` word graph: vertices are `L_n`, directed edges are `L_{n+1}`
/// with prefix/suffix incidence.
#[derive(Debug, Clone)]
pub struct RauzyGraph {
    pub order: usize,
    pub vertices: Vec<Vec<Letter>>,
    /// `(from, to, last letter)`; the edge word is `vertices[from] + letter`.
    pub edges: Vec<(usize, usize, Letter)>,
    pub out: Vec<Vec<usize>>,
}

impl RauzyGraph {
    pub fn vertex_index(&self, w: &[Letter]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(w)).ok()
    }

    pub fn edge_word(&self, e: usize) -> Vec<Letter> {
        let (from, _, letter) = self.edges[e];
        let mut w = self.vertices[from].clone();
        w.push(letter);
        w
    }
}

impl FactorLanguage {
    pub fn rauzy_graph(&self, order: usize) -> Result<RauzyGraph, LanguageError> {
        let vertices: Vec<Vec<Letter>> = self.factors(order)?.iter().cloned().collect();
        let longer = self.factors(order + 1)?;
        let find = |w: &[Letter]| {
            vertices
                .binary_search_by(|v| v.as_slice().cmp(w))
                .expect("prefix/suffix of a factor is a factor")
        };
        let mut edges = Vec::with_capacity(longer.len());
        let mut out = vec![Vec::new(); vertices.len()];
        for w in longer.iter() {
            let from = find(&w[..order]);
            let to = find(&w[1..]);
            out[from].push(edges.len());
            edges.push((from, to, w[order]));
        }
        Ok(RauzyGraph { order, vertices, edges, out })
    }
}
