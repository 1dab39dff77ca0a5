use std::collections::BTreeSet;

use kgraph::{GraphError, KGraph, Morphism};

/// `Λ^min(λ, η)` by filtering all `(α, β)` of the right degrees with
/// `λα = ηβ`.
pub fn brute_lambda_min(
    g: &KGraph,
    lambda: &Morphism,
    eta: &Morphism,
) -> Result<BTreeSet<(Morphism, Morphism)>, GraphError> {
    let top = lambda.degree().join(eta.degree());
    let da = top.checked_sub(lambda.degree()).expect("join dominates");
    let db = top.checked_sub(eta.degree()).expect("join dominates");
    let mut out = BTreeSet::new();
    if lambda.range() != eta.range() {
        return Ok(out);
    }
    for alpha in g.enumerate_all(&da)?.into_iter().filter(|a| a.range() == lambda.source()) {
        let left = g.compose(lambda, &alpha)?;
        for beta in g.enumerate_all(&db)?.into_iter().filter(|b| b.range() == eta.source()) {
            if left == g.compose(eta, &beta)? {
                out.insert((alpha.clone(), beta));
            }
        }
    }
    Ok(out)
}
