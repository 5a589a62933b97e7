use std::sync::Arc;

use crate::cohomology::{abelian_extension_from_2cocycle, Cochain, ShortExactSequence};

use super::lie::{CrossedModule, InducedPair};
use super::CrossedError;

/// The crossed module `M' →μ e` spliced from `0 → M → M' → M'' → 0` and the
/// abelian extension `0 → M'' → e → g → 0` of `ext2`. `e` acts on `M'`
/// through its `g`-coordinates and `μ(m') = (β m', 0)`. The returned pair
/// identifies `coker μ` with `g` and `ker μ` with `M` via `α`.
pub fn yoneda_crossed_module(
    ses: &ShortExactSequence,
    ext2: &Cochain,
) -> Result<(CrossedModule, InducedPair), CrossedError> {
    let ext = abelian_extension_from_2cocycle(ses.quotient(), ext2)?;
    let e = Arc::new(ext.algebra);
    let v = ses.middle().pullback(e, &ext.projection)?;
    let mu = ext.inclusion.compose(ses.beta().map());
    let cm = CrossedModule::new(v, mu)?;
    let pair = InducedPair::framed(&cm, ext.projection, ses.sub().clone(), ses.alpha().map().clone())?;
    Ok((cm, pair))
}
