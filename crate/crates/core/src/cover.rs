//! Inner and outer covers of an interval with respect to a family, with the
//! size guarantees that make them useful: reach chains, cover construction,
//! cover doubling, disjoint-interval lower bounds, and order-compatible
//! bijections between covers.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{is_linked_list, Family, Interval, OrderMap};
use crate::scalar::ExactScalar;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    Inner,
    Outer,
}

/// An ordered linked list of intervals covering `base`, tagged by the kind
/// of cover it claims to be with respect to `against`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LinkedCover {
    pub kind: CoverKind,
    pub base: Interval,
    pub intervals: Vec<Interval>,
    pub against: Family,
}

impl LinkedCover {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Checks every invariant of the cover exactly.
    ///
    /// Both kinds require a nonempty linked list whose union is `base`.
    /// An inner cover additionally requires the family union to equal `base`
    /// and every list element to be approximately dominated by the family.
    /// An outer cover requires the family union to sit inside `base` and
    /// every family member to lie inside some list element.
    pub fn validate(&self) -> bool {
        if self.intervals.is_empty() || !is_linked_list(&self.intervals) {
            return false;
        }
        // A linked list has no gaps, so its union is the span.
        let first = self.intervals.first().unwrap();
        let last = self.intervals.last().unwrap();
        if first.lo() != self.base.lo() || last.hi() != self.base.hi() {
            return false;
        }
        match self.kind {
            CoverKind::Inner => {
                self.against.components() == vec![self.base.clone()]
                    && self
                        .intervals
                        .iter()
                        .all(|e| e.is_approx_dominated_by(&self.against))
            }
            CoverKind::Outer => {
                let list = Family::new(self.intervals.clone());
                self.against
                    .iter()
                    .all(|m| m.subset_of(&self.base) && m.is_dominated_by(&list))
            }
        }
    }
}

/// A reach chain: points `x_1 < … < x_n` inside `base` with
/// `L(x_1) = base.lo`, `R(x_i) = x_{i+1}` and `R(x_n) = base.hi`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RChain {
    pub points: Vec<ExactScalar>,
    pub base: Interval,
}

impl RChain {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Checks the chain invariants against a family.
    pub fn is_valid_for(&self, family: &Family) -> bool {
        if self.points.is_empty() {
            return false;
        }
        let mut expect_next: Option<ExactScalar> = None;
        for (idx, x) in self.points.iter().enumerate() {
            let Ok((l, r)) = family.reach(x) else {
                return false;
            };
            if idx == 0 && l != *self.base.lo() {
                return false;
            }
            if let Some(prev_r) = expect_next.take() {
                if prev_r != *x {
                    return false;
                }
            }
            expect_next = Some(r);
        }
        expect_next.unwrap() == *self.base.hi()
    }
}

fn require_union(family: &Family, base: &Interval) -> Result<()> {
    if family.components() != vec![base.clone()] {
        return Err(Error::UnionMismatch);
    }
    Ok(())
}

/// The least right endpoint among members starting exactly at `base.lo`.
fn least_hi_at_base(family: &Family, base: &Interval) -> Option<ExactScalar> {
    family
        .iter()
        .filter(|m| m.lo() == base.lo())
        .map(|m| m.hi().clone())
        .min()
}

/// Builds the reach chain deterministically: the seed is the midpoint of
/// the shortest member starting at `base.lo`, and each successive point is
/// the reach of the previous one, stopping when the reach attains
/// `base.hi`.
pub fn r_chain(family: &Family, base: &Interval) -> Result<RChain> {
    require_union(family, base)?;
    let Some(v_min) = least_hi_at_base(family, base) else {
        // Unreachable for a finite family whose union is exactly `base`,
        // but kept so the contract is total.
        return Err(Error::NoChain);
    };
    let mut points = vec![base.lo().midpoint(&v_min)];
    loop {
        let (_, r) = family.reach(points.last().unwrap())?;
        if r == *base.hi() {
            break;
        }
        points.push(r);
    }
    Ok(RChain {
        points,
        base: base.clone(),
    })
}

/// The member attaining `R(x)`, preferring open containment of `x` and then
/// the least left endpoint. Returns `(member, openly_contains_x)`.
fn reach_achiever(family: &Family, x: &ExactScalar, r: &ExactScalar) -> (Interval, bool) {
    let mut best: Option<(&Interval, bool)> = None;
    for m in family.iter() {
        if m.hi() == r && *m.lo() <= *x && *x < *m.hi() {
            let open = m.lo() < x;
            let better = match best {
                None => true,
                Some((cur, cur_open)) => {
                    (open, std::cmp::Reverse(m.lo())) > (cur_open, std::cmp::Reverse(cur.lo()))
                }
            };
            if better {
                best = Some((m, open));
            }
        }
    }
    let (m, open) = best.expect("reach value is attained by some member");
    (m.clone(), open)
}

/// The member openly containing `x` with the greatest right endpoint,
/// breaking ties toward the least left endpoint.
fn widest_open_container(family: &Family, x: &ExactScalar) -> Option<Interval> {
    family
        .iter()
        .filter(|m| m.contains(x))
        .max_by(|a, b| {
            a.hi()
                .cmp(b.hi())
                .then_with(|| b.lo().cmp(a.lo()))
        })
        .cloned()
}

/// Drops intervals contained in another and restores strict linked-list
/// separation by nudging left endpoints a quarter of the available gap.
/// Shrinking an interval keeps it dominated, and every vacated point stays
/// covered by the overlapping predecessor.
fn tidy_into_linked_list(mut candidates: Vec<Interval>) -> Vec<Interval> {
    candidates.sort_by(|a, b| a.lo().cmp(b.lo()).then_with(|| b.hi().cmp(a.hi())));
    let mut kept: Vec<Interval> = Vec::with_capacity(candidates.len());
    for c in candidates {
        match kept.last() {
            Some(prev) if c.subset_of(prev) => continue,
            _ => kept.push(c),
        }
    }
    let mut i = 0;
    while i + 2 <= kept.len() {
        if i + 2 < kept.len() && kept[i].hi() >= kept[i + 2].lo() {
            // Triple overlap: raise the third interval's left endpoint into
            // (b_{i}, b_{i+1}).
            let floor = kept[i].hi().clone();
            let ceil = kept[i + 1].hi().clone();
            let step = (&ceil - &floor) * ExactScalar::new(1, 4).unwrap();
            let new_lo = &floor + &step;
            kept[i + 2] = Interval::new(new_lo, kept[i + 2].hi().clone()).unwrap();
        }
        i += 1;
    }
    kept
}

/// Builds an inner cover of `base` with respect to `family`.
///
/// The construction walks the reach chain, takes the reach-attaining member
/// at each chain point, bridges the start with a short interval inside the
/// shortest member at `base.lo` when needed, and patches any chain point
/// that only its attaining member's closure holds. On families in generic
/// position this yields at most `n + 2` intervals for a chain of length
/// `n`.
pub fn build_inner_cover(family: &Family, base: &Interval) -> Result<LinkedCover> {
    require_union(family, base)?;
    if base.is_dominated_by(family) {
        return Ok(LinkedCover {
            kind: CoverKind::Inner,
            base: base.clone(),
            intervals: vec![base.clone()],
            against: family.clone(),
        });
    }
    let chain = r_chain(family, base)?;
    let v_min = least_hi_at_base(family, base).expect("chain exists");
    let n = chain.points.len();

    let mut candidates: Vec<Interval> = Vec::with_capacity(n + 2);
    let mut achievers: Vec<(Interval, bool)> = Vec::with_capacity(n);
    for (idx, x) in chain.points.iter().enumerate() {
        let r = if idx + 1 < n {
            chain.points[idx + 1].clone()
        } else {
            base.hi().clone()
        };
        achievers.push(reach_achiever(family, x, &r));
    }

    let first_lo = achievers[0].0.lo().clone();
    if first_lo > *base.lo() {
        let q0 = first_lo.midpoint(&v_min);
        candidates.push(Interval::new(base.lo().clone(), q0).unwrap());
    }
    for (idx, (member, open)) in achievers.iter().enumerate() {
        candidates.push(member.clone());
        if idx > 0 && !open {
            // The chain point sits on the member's left endpoint; bridge it
            // with the widest member that holds it openly.
            if let Some(patch) = widest_open_container(family, &chain.points[idx]) {
                candidates.push(patch);
            }
        }
    }

    let intervals = tidy_into_linked_list(candidates);
    let cover = LinkedCover {
        kind: CoverKind::Inner,
        base: base.clone(),
        intervals,
        against: family.clone(),
    };
    debug_assert!(cover.validate());
    Ok(cover)
}

/// Builds an outer cover of `base` with respect to `family` with exactly
/// `floor(n/2) + 1` elements, where `n` is the reach-chain length:
/// `E_i = (x_{2i-3}, x_{2i})`, reading `x_j` as `base.lo` for `j <= 0` and
/// as `base.hi` for `j > n`.
pub fn build_outer_cover(family: &Family, base: &Interval) -> Result<LinkedCover> {
    require_union(family, base)?;
    let chain = r_chain(family, base)?;
    let n = chain.points.len();
    let m = n / 2 + 1;
    let point = |j: isize| -> ExactScalar {
        if j <= 0 {
            base.lo().clone()
        } else if j > n as isize {
            base.hi().clone()
        } else {
            chain.points[(j - 1) as usize].clone()
        }
    };
    let mut intervals = Vec::with_capacity(m);
    for i in 1..=m as isize {
        intervals.push(Interval::new(point(2 * i - 3), point(2 * i)).unwrap());
    }
    let cover = LinkedCover {
        kind: CoverKind::Outer,
        base: base.clone(),
        intervals,
        against: family.clone(),
    };
    debug_assert!(cover.validate());
    Ok(cover)
}

/// Size check from the reach chain: a valid outer cover can have at most
/// `n + 1` elements.
pub fn outer_bound_check(cover: &LinkedCover, chain: &RChain) -> bool {
    cover.len() <= chain.len() + 1
}

/// Endpoint diagnostics for covers of `base` with respect to `family`
/// (which must satisfy `∪family ⊆ base`).
///
/// Returns `(forced_least, forced_greatest, inner_least_possible,
/// inner_greatest_possible)`: whether every outer cover is forced to have a
/// least (greatest) element, and whether an inner cover with a least
/// (greatest) element exists.
pub fn cover_extremes(family: &Family, base: &Interval) -> (bool, bool, bool, bool) {
    let starts_at_lo = family.iter().any(|m| m.lo() == base.lo());
    let ends_at_hi = family.iter().any(|m| m.hi() == base.hi());
    let full_union = family.components() == vec![base.clone()];
    (
        starts_at_lo,
        ends_at_hi,
        starts_at_lo && full_union,
        ends_at_hi && full_union,
    )
}

/// Doubles an outer cover: produces an order map `theta` interleaving the
/// cover's endpoints and a merged cover of exactly `2n - 1` elements that
/// is outer for every family refining both `family` and
/// `theta(family)`. The stored `against` is the family of pairwise
/// intersections, the canonical common refinement.
pub fn double_outer_cover(
    family: &Family,
    base: &Interval,
    cover: &LinkedCover,
) -> Result<(OrderMap, LinkedCover)> {
    let n = cover.len();
    if n < 2 {
        return Err(Error::CoverTooSmall);
    }
    if cover.kind != CoverKind::Outer || !cover.validate() {
        return Err(Error::PreconditionViolated(
            "cover must be a valid outer cover".into(),
        ));
    }
    let xs: Vec<ExactScalar> = cover.intervals.iter().map(|e| e.lo().clone()).collect();
    let ys: Vec<ExactScalar> = cover.intervals.iter().map(|e| e.hi().clone()).collect();

    // Pick x'_k and y'_{k-1} in the window (y_{k-1}, x_{k+1}) — the last
    // window is capped by base.hi — at the quarter and half points.
    let quarter = ExactScalar::new(1, 4).unwrap();
    let half = ExactScalar::new(1, 2).unwrap();
    let mut xp: Vec<ExactScalar> = vec![xs[0].clone()];
    let mut yp: Vec<ExactScalar> = Vec::with_capacity(n);
    for k in 1..n {
        let lo = &ys[k - 1];
        let hi = if k + 1 < n { &xs[k + 1] } else { base.hi() };
        xp.push(lo.lerp(hi, &quarter));
        yp.push(lo.lerp(hi, &half));
    }
    yp.push(ys[n - 1].clone());

    let mut breakpoints = Vec::with_capacity(2 * n);
    for k in 0..n {
        breakpoints.push((xs[k].clone(), xp[k].clone()));
        breakpoints.push((ys[k].clone(), yp[k].clone()));
    }
    let theta = OrderMap::new(breakpoints)?;

    let mut merged = Vec::with_capacity(2 * n - 1);
    for l in 0..n {
        merged.push(Interval::new(xp[l].clone(), ys[l].clone()).unwrap());
        if l + 1 < n {
            merged.push(Interval::new(xs[l + 1].clone(), yp[l].clone()).unwrap());
        }
    }

    let mut common = Vec::new();
    let image = theta.apply_family(family);
    for e in family.iter() {
        for f in image.iter() {
            if let Some(g) = e.intersect(f) {
                common.push(g);
            }
        }
    }
    let merged_cover = LinkedCover {
        kind: CoverKind::Outer,
        base: base.clone(),
        intervals: merged,
        against: Family::new(common),
    };
    debug_assert!(merged_cover.validate());
    Ok((theta, merged_cover))
}

/// Builds an outer cover of `base` with at least `ceil(k/2)` elements out
/// of `k` pairwise disjoint intervals none of which is dominated by
/// `family`. The family is first padded with short tiles so its union is
/// exactly `base`; the tiles are shorter than every listed interval, so
/// nothing new gets dominated.
pub fn outer_cover_from_disjoint(
    family: &Family,
    base: &Interval,
    disjoint: &[Interval],
) -> Result<LinkedCover> {
    if disjoint.is_empty() {
        return Err(Error::PreconditionViolated("no intervals listed".into()));
    }
    let mut sorted = disjoint.to_vec();
    sorted.sort();
    for w in sorted.windows(2) {
        if w[0].overlaps(&w[1]) {
            return Err(Error::PreconditionViolated(format!(
                "{} and {} overlap",
                w[0], w[1]
            )));
        }
    }
    for d in &sorted {
        if !d.subset_of(base) {
            return Err(Error::PreconditionViolated(format!(
                "{} is not inside {}",
                d, base
            )));
        }
        if d.is_dominated_by(family) {
            return Err(Error::PreconditionViolated(format!(
                "{} is dominated by the family",
                d
            )));
        }
    }
    for m in family.iter() {
        if !m.subset_of(base) {
            return Err(Error::PreconditionViolated(format!(
                "family member {} is not inside {}",
                m, base
            )));
        }
    }

    let min_len = sorted
        .iter()
        .map(Interval::length)
        .min()
        .expect("nonempty list");
    let eta = min_len * ExactScalar::new(1, 2).unwrap();
    let mut padded = family.clone();
    let mut t = base.lo().clone();
    let step = eta.clone() * ExactScalar::new(1, 2).unwrap();
    loop {
        let end = (&t + &eta).min(base.hi().clone());
        let start = if end == *base.hi() {
            (base.hi() - &eta).max(base.lo().clone())
        } else {
            t.clone()
        };
        padded.insert(Interval::new(start, end.clone()).unwrap());
        if end == *base.hi() {
            break;
        }
        t = &t + &step;
    }
    debug_assert!(sorted.iter().all(|d| !d.is_dominated_by(&padded)));

    let mut cover = build_outer_cover(&padded, base)?;
    cover.against = family.clone();
    debug_assert!(cover.validate());
    Ok(cover)
}

/// An increasing piecewise-linear bijection mapping each element of the
/// outer cover into an element of the inner cover. Outer elements are
/// grouped by the nearest inner index (ties toward the smaller index), the
/// grouped unions form a linked list, and the map sends each union onto
/// the corresponding inner element.
pub fn order_compatible_bijection(outer: &LinkedCover, inner: &LinkedCover) -> Result<OrderMap> {
    if outer.kind != CoverKind::Outer || inner.kind != CoverKind::Inner {
        return Err(Error::PreconditionViolated(
            "expected an outer cover and an inner cover".into(),
        ));
    }
    let n = outer.len();
    let m = inner.len();
    if n < m {
        return Err(Error::IncompatibleOrderTypes);
    }
    // Group indices 0..n by nearest element of 0..m (ties to the smaller
    // index): groups are {0}, {1}, …, {m-2}, {m-1, …, n-1}.
    let mut breakpoints = Vec::with_capacity(2 * m);
    for j in 0..m {
        let group_lo = outer.intervals[j].lo();
        let group_hi = if j + 1 < m {
            outer.intervals[j].hi()
        } else {
            outer.intervals[n - 1].hi()
        };
        breakpoints.push((group_lo.clone(), inner.intervals[j].lo().clone()));
        breakpoints.push((group_hi.clone(), inner.intervals[j].hi().clone()));
    }
    OrderMap::new(breakpoints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn iv(lo: &str, hi: &str) -> Interval {
        Interval::new(rat(lo), rat(hi)).unwrap()
    }

    fn fam(pairs: &[(&str, &str)]) -> Family {
        pairs.iter().map(|(a, b)| iv(a, b)).collect()
    }

    #[test]
    fn r_chain_examples() {
        let chain = r_chain(&fam(&[("0", "2"), ("1", "3")]), &iv("0", "3")).unwrap();
        assert_eq!(chain.points, vec![rat("1")]);
        assert!(chain.is_valid_for(&fam(&[("0", "2"), ("1", "3")])));

        let chain = r_chain(&fam(&[("0", "3")]), &iv("0", "3")).unwrap();
        assert_eq!(chain.points, vec![rat("3/2")]);

        let family = fam(&[("0", "2"), ("1", "3"), ("2", "4"), ("3", "5")]);
        let chain = r_chain(&family, &iv("0", "5")).unwrap();
        assert_eq!(chain.points, vec![rat("1"), rat("3")]);
        assert!(chain.is_valid_for(&family));
    }

    #[test]
    fn r_chain_union_mismatch() {
        assert!(matches!(
            r_chain(&fam(&[("0", "1"), ("2", "3")]), &iv("0", "3")),
            Err(Error::UnionMismatch)
        ));
    }

    #[test]
    fn inner_cover_examples() {
        let family = fam(&[("0", "2"), ("1", "3")]);
        let cover = build_inner_cover(&family, &iv("0", "3")).unwrap();
        assert_eq!(cover.intervals, vec![iv("0", "3/2"), iv("1", "3")]);
        assert!(cover.validate());

        let cover = build_inner_cover(&fam(&[("0", "5")]), &iv("0", "5")).unwrap();
        assert_eq!(cover.intervals, vec![iv("0", "5")]);

        assert!(matches!(
            build_inner_cover(&fam(&[("0", "1"), ("2", "3")]), &iv("0", "3")),
            Err(Error::UnionMismatch)
        ));
    }

    #[test]
    fn inner_cover_size_bound() {
        let family = fam(&[("0", "2"), ("1", "3"), ("2", "4"), ("3", "5")]);
        let base = iv("0", "5");
        let chain = r_chain(&family, &base).unwrap();
        let cover = build_inner_cover(&family, &base).unwrap();
        assert!(cover.validate());
        assert!(cover.len() <= chain.len() + 2);
    }

    #[test]
    fn outer_cover_examples() {
        let cover = build_outer_cover(&fam(&[("0", "2"), ("1", "3")]), &iv("0", "3")).unwrap();
        assert_eq!(cover.intervals, vec![iv("0", "3")]);
        assert!(cover.validate());

        let family = fam(&[("0", "2"), ("1", "3"), ("2", "4"), ("3", "5")]);
        let cover = build_outer_cover(&family, &iv("0", "5")).unwrap();
        assert_eq!(cover.len(), 2);
        assert!(cover.validate());

        let cover = build_outer_cover(&fam(&[("0", "5")]), &iv("0", "5")).unwrap();
        assert_eq!(cover.intervals, vec![iv("0", "5")]);
    }

    #[test]
    fn outer_bound_holds_for_construction() {
        let family = fam(&[("0", "2"), ("1", "3"), ("2", "4"), ("3", "5")]);
        let base = iv("0", "5");
        let chain = r_chain(&family, &base).unwrap();
        let cover = build_outer_cover(&family, &base).unwrap();
        assert!(outer_bound_check(&cover, &chain));
    }

    #[test]
    fn validate_rejects_tampering() {
        let family = fam(&[("0", "2"), ("1", "3")]);
        let mut cover = build_inner_cover(&family, &iv("0", "3")).unwrap();
        // Replace an element by an undominated interval.
        cover.intervals[1] = iv("1/2", "3");
        assert!(!cover.validate());

        let mut outer = build_outer_cover(&family, &iv("0", "3")).unwrap();
        outer.intervals = vec![iv("0", "3/2"), iv("1", "3")];
        // (0,2) fits in neither element.
        assert!(!outer.validate());
    }

    #[test]
    fn cover_extremes_examples() {
        let family = fam(&[("0", "2"), ("1", "3")]);
        assert_eq!(
            cover_extremes(&family, &iv("0", "3")),
            (true, true, true, true)
        );

        let shrinking = fam(&[
            ("1/2", "1"),
            ("1/4", "5/8"),
            ("1/8", "5/16"),
            ("1/16", "5/32"),
        ]);
        let (forced_least, _, inner_least, _) = cover_extremes(&shrinking, &iv("0", "1"));
        assert!(!forced_least);
        assert!(!inner_least);

        assert_eq!(
            cover_extremes(&Family::empty(), &iv("0", "1")),
            (false, false, false, false)
        );
    }

    #[test]
    fn double_outer_cover_sizes() {
        let family = fam(&[("0", "2"), ("1", "3"), ("2", "4"), ("3", "5")]);
        let base = iv("0", "5");
        let cover = build_outer_cover(&family, &base).unwrap();
        assert_eq!(cover.len(), 2);
        let (theta, merged) = double_outer_cover(&family, &base, &cover).unwrap();
        assert_eq!(merged.len(), 3);
        assert!(theta.is_strictly_increasing());
        assert!(merged.validate());

        let single = build_outer_cover(&fam(&[("0", "5")]), &iv("0", "5")).unwrap();
        assert!(matches!(
            double_outer_cover(&fam(&[("0", "5")]), &iv("0", "5"), &single),
            Err(Error::CoverTooSmall)
        ));
    }

    #[test]
    fn doubled_cover_outer_for_common_refinement() {
        let family = fam(&[("0", "2"), ("1", "3"), ("2", "4"), ("3", "5")]);
        let base = iv("0", "5");
        let cover = build_outer_cover(&family, &base).unwrap();
        let (theta, merged) = double_outer_cover(&family, &base, &cover).unwrap();
        // The stored `against` refines both the family and its image.
        assert!(merged.against.refines(&family));
        assert!(merged.against.refines(&theta.apply_family(&family)));
    }

    #[test]
    fn disjoint_lower_bound() {
        let family = fam(&[("0", "1"), ("2", "3"), ("4", "5"), ("6", "7")]);
        let base = iv("0", "8");
        let disjoint = vec![iv("1/2", "3/2"), iv("5/2", "7/2"), iv("9/2", "11/2"), iv("13/2", "15/2")];
        let cover = outer_cover_from_disjoint(&family, &base, &disjoint).unwrap();
        assert!(cover.validate());
        assert!(cover.len() >= 2);

        // An interval dominated by the family is rejected.
        let bad = vec![iv("0", "1")];
        assert!(matches!(
            outer_cover_from_disjoint(&family, &base, &bad),
            Err(Error::PreconditionViolated(_))
        ));
        // Overlapping intervals are rejected.
        let overlapping = vec![iv("1/2", "3/2"), iv("1", "2")];
        assert!(matches!(
            outer_cover_from_disjoint(&family, &base, &overlapping),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn bijection_examples() {
        let family = fam(&[("0", "2"), ("1", "3")]);
        let base = iv("0", "3");
        let outer = LinkedCover {
            kind: CoverKind::Outer,
            base: base.clone(),
            intervals: vec![iv("0", "2"), iv("1", "3")],
            against: fam(&[("0", "1"), ("3/2", "2"), ("5/2", "3")]),
        };
        let inner = build_inner_cover(&family, &base).unwrap();
        let theta = order_compatible_bijection(&outer, &inner).unwrap();
        assert!(theta.is_strictly_increasing());
        let image: Family = outer
            .intervals
            .iter()
            .map(|e| theta.apply_interval(e))
            .collect();
        assert!(image.refines(&Family::new(inner.intervals.clone())));

        // |outer| < |inner| is incompatible.
        let one = LinkedCover {
            kind: CoverKind::Outer,
            base: base.clone(),
            intervals: vec![iv("0", "3")],
            against: Family::empty(),
        };
        assert!(matches!(
            order_compatible_bijection(&one, &inner),
            Err(Error::IncompatibleOrderTypes)
        ));
    }
}
