use std::fmt;
use std::str::FromStr;

use super::characterizations::decide_simplicial_remainder;
use super::{
    decide_dfs_interval, decide_generic, decide_mcs_split, decide_mns_chordal,
    mcs_interval_sufficient, Sufficiency, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexOrdering};
use crate::oracle::{default_guard, is_endvertex_exhaustive};
use crate::recognize::{
    is_claw_net_free, recognize_chordal, recognize_interval, recognize_split,
    recognize_unit_interval, CliqueOrder,
};
use crate::search::SearchKind;

/// Reason attached to cells no decider in this crate covers.
pub const NO_CHARACTERIZATION: &str = "no polynomial characterization in scope";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClassHint {
    #[default]
    Auto,
    Split,
    Chordal,
    Interval,
    UnitInterval,
}

impl ClassHint {
    pub fn name(self) -> &'static str {
        match self {
            ClassHint::Auto => "auto",
            ClassHint::Split => "split",
            ClassHint::Chordal => "chordal",
            ClassHint::Interval => "interval",
            ClassHint::UnitInterval => "unit-interval",
        }
    }
}

impl fmt::Display for ClassHint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassHint {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        [
            ClassHint::Auto,
            ClassHint::Split,
            ClassHint::Chordal,
            ClassHint::Interval,
            ClassHint::UnitInterval,
        ]
        .into_iter()
        .find(|h| h.name() == s.to_ascii_lowercase().replace('_', "-"))
        .ok_or_else(|| format!("unknown graph class `{s}`"))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DispatchOptions {
    pub class_hint: ClassHint,
    /// Oracle fallback limit; `None` uses the per-kind default, `Some(0)`
    /// disables the fallback.
    pub oracle_guard: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Answer {
    Yes,
    No,
    Unknown(String),
}

/// Which characterization produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Simplicial and `G − N[t]` connected (MNS, MCS, LDFS on unit interval).
    UnitInterval,
    /// Simplicial and lower-degree neighborhoods chained (MCS on split).
    SplitMcs,
    /// Simplicial and separators in `N(t)` chained (MNS on chordal).
    ChordalMns,
    /// `G[N(t)]` hamiltonian (DFS on interval).
    IntervalDfs,
    /// One-sided clique-order condition (MCS on interval).
    IntervalMcsSufficient,
    /// Not a cut vertex (DFS on (claw, net)-free, Generic everywhere).
    NotCutVertex,
    Oracle,
    /// Nothing applied.
    None,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::UnitInterval => "unit-interval",
            Route::SplitMcs => "split-mcs",
            Route::ChordalMns => "chordal-mns",
            Route::IntervalDfs => "interval-dfs",
            Route::IntervalMcsSufficient => "interval-mcs-sufficient",
            Route::NotCutVertex => "not-cut-vertex",
            Route::Oracle => "oracle",
            Route::None => "none",
        }
    }
}

/// Class memberships established while dispatching; `None` = not examined.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClassReport {
    pub chordal: Option<bool>,
    pub split: Option<bool>,
    pub interval: Option<bool>,
    pub unit_interval: Option<bool>,
    pub claw_net_free: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DispatchOutcome {
    pub answer: Answer,
    pub route: Route,
    pub classes: ClassReport,
    /// The decider's verdict, carrying the failed condition on a no.
    pub verdict: Option<Verdict>,
    /// A search order ending at the target, when the oracle found one.
    pub witness: Option<VertexOrdering>,
    /// Set when no characterization settled the question, even if the
    /// oracle then did.
    pub decider_gap: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Class {
    UnitInterval,
    Split,
    Interval,
    Chordal,
    ClawNetFree,
}

fn route_for(class: Class, kind: SearchKind) -> Option<Route> {
    use SearchKind::*;
    match (class, kind) {
        (Class::UnitInterval, Mns | Mcs | Ldfs) => Some(Route::UnitInterval),
        (Class::UnitInterval | Class::ClawNetFree, Dfs) => Some(Route::NotCutVertex),
        (Class::Split, Mcs) => Some(Route::SplitMcs),
        (Class::Split | Class::Interval | Class::Chordal, Mns) => Some(Route::ChordalMns),
        (Class::Interval, Dfs) => Some(Route::IntervalDfs),
        (Class::Interval, Mcs) => Some(Route::IntervalMcsSufficient),
        _ => None,
    }
}

struct Memberships<'a> {
    g: &'a Graph,
    report: ClassReport,
    clique_order: Option<CliqueOrder>,
}

impl Memberships<'_> {
    fn chordal(&mut self) -> Result<bool> {
        if let Some(b) = self.report.chordal {
            return Ok(b);
        }
        let b = recognize_chordal(self.g)?.is_chordal();
        self.report.chordal = Some(b);
        Ok(b)
    }

    fn has(&mut self, class: Class) -> Result<bool> {
        let g = self.g;
        Ok(match class {
            Class::Chordal => self.chordal()?,
            Class::UnitInterval => {
                let b = self.chordal()? && recognize_unit_interval(g)?.is_some();
                self.report.unit_interval = Some(b);
                b
            }
            Class::Split => {
                let b = recognize_split(g).is_some();
                self.report.split = Some(b);
                b
            }
            Class::Interval => {
                self.clique_order = if self.chordal()? {
                    recognize_interval(g)?
                } else {
                    None
                };
                let b = self.clique_order.is_some();
                self.report.interval = Some(b);
                b
            }
            Class::ClawNetFree => {
                let b = is_claw_net_free(g);
                self.report.claw_net_free = Some(b);
                b
            }
        })
    }
}

/// Decides whether `t` is a `kind` end-vertex of `g` with the strongest
/// applicable characterization, falling back to the exhaustive oracle under
/// its guard and otherwise answering `Unknown`.
///
/// Classes are tried in the order unit interval, split, interval, chordal,
/// (claw, net)-free; a class hint restricts this to the hinted class after
/// validating it. Generic search needs no class: its end-vertices are the
/// non-cut vertices of any connected graph.
pub fn dispatch_endvertex(
    g: &Graph,
    t: usize,
    kind: SearchKind,
    options: &DispatchOptions,
) -> Result<DispatchOutcome> {
    g.check_vertex(t)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut members = Memberships {
        g,
        report: ClassReport::default(),
        clique_order: None,
    };
    let candidates: Vec<Class> = match options.class_hint {
        ClassHint::Auto => vec![
            Class::UnitInterval,
            Class::Split,
            Class::Interval,
            Class::Chordal,
            Class::ClawNetFree,
        ],
        hint => {
            let class = match hint {
                ClassHint::Split => Class::Split,
                ClassHint::Chordal => Class::Chordal,
                ClassHint::Interval => Class::Interval,
                _ => Class::UnitInterval,
            };
            if !members.has(class)? {
                return Err(Error::ContradictoryHint(hint.name().into()));
            }
            vec![class]
        }
    };

    let decided = |verdict: Verdict, route: Route, report: ClassReport| DispatchOutcome {
        answer: if verdict.is_yes() {
            Answer::Yes
        } else {
            Answer::No
        },
        route,
        classes: report,
        verdict: Some(verdict),
        witness: None,
        decider_gap: None,
    };

    if kind == SearchKind::Generic {
        return Ok(decided(
            decide_generic(g, t)?,
            Route::NotCutVertex,
            members.report,
        ));
    }

    let mut gap = None;
    for class in candidates {
        let Some(route) = route_for(class, kind) else {
            continue;
        };
        let hinted = options.class_hint != ClassHint::Auto;
        if !hinted && !members.has(class)? {
            continue;
        }
        let verdict = match route {
            Route::UnitInterval => decide_simplicial_remainder(g, t)?,
            Route::SplitMcs => decide_mcs_split(g, t)?,
            Route::ChordalMns => decide_mns_chordal(g, t)?,
            Route::IntervalDfs => decide_dfs_interval(g, t)?,
            Route::NotCutVertex => decide_generic(g, t)?,
            Route::IntervalMcsSufficient => {
                let order = match members.clique_order.take() {
                    Some(o) => o,
                    None => recognize_interval(g)?.ok_or(Error::NotInterval)?,
                };
                match mcs_interval_sufficient(g, &order, t)? {
                    Sufficiency::Yes => Verdict::Yes,
                    Sufficiency::Unknown => {
                        gap = Some(format!(
                            "{NO_CHARACTERIZATION}: MCS on interval graphs, and the clique-order sufficient condition is inconclusive"
                        ));
                        break;
                    }
                }
            }
            Route::Oracle | Route::None => unreachable!("not a decider route"),
        };
        return Ok(decided(verdict, route, members.report));
    }

    let gap = gap.unwrap_or_else(|| format!("{NO_CHARACTERIZATION} for {kind} on this graph"));
    let guard = options.oracle_guard.unwrap_or_else(|| default_guard(kind));
    if g.vertex_count() <= guard {
        let witness = is_endvertex_exhaustive(g, kind, t, None, guard)?;
        return Ok(DispatchOutcome {
            answer: if witness.is_some() {
                Answer::Yes
            } else {
                Answer::No
            },
            route: Route::Oracle,
            classes: members.report,
            verdict: None,
            witness,
            decider_gap: Some(gap),
        });
    }
    Ok(DispatchOutcome {
        answer: Answer::Unknown(format!(
            "{gap}; {} vertices exceed the oracle guard of {guard}",
            g.vertex_count()
        )),
        route: Route::None,
        classes: members.report,
        verdict: None,
        witness: None,
        decider_gap: Some(gap),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig5() -> Graph {
        Graph::from_edges(
            7,
            [
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 2),
                (4, 3),
                (5, 0),
                (6, 1),
            ],
        )
        .unwrap()
    }

    #[test]
    fn split_route_for_figure_five() {
        let out =
            dispatch_endvertex(&fig5(), 4, SearchKind::Mcs, &DispatchOptions::default()).unwrap();
        assert_eq!(out.answer, Answer::No);
        assert_eq!(out.route, Route::SplitMcs);
    }

    #[test]
    fn unit_interval_route() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 3), (3, 4)]).unwrap();
        let out = dispatch_endvertex(&g, 0, SearchKind::Ldfs, &DispatchOptions::default()).unwrap();
        assert_eq!((out.answer, out.route), (Answer::Yes, Route::UnitInterval));
    }

    #[test]
    fn open_cell_falls_back_to_oracle() {
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 7),
                (7, 4),
                (4, 5),
                (5, 6),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap();
        let out = dispatch_endvertex(&g, 7, SearchKind::Mcs, &DispatchOptions::default()).unwrap();
        assert_eq!(out.answer, Answer::No);
        assert_eq!(out.route, Route::Oracle);
        assert!(out.decider_gap.unwrap().starts_with(NO_CHARACTERIZATION));
        let no_oracle = DispatchOptions {
            oracle_guard: Some(0),
            ..Default::default()
        };
        let out = dispatch_endvertex(&g, 7, SearchKind::Mcs, &no_oracle).unwrap();
        assert!(matches!(out.answer, Answer::Unknown(r) if r.starts_with(NO_CHARACTERIZATION)));
    }

    #[test]
    fn contradictory_hint() {
        let opts = DispatchOptions {
            class_hint: ClassHint::Split,
            ..Default::default()
        };
        assert_eq!(
            dispatch_endvertex(&Graph::cycle(4), 0, SearchKind::Mcs, &opts),
            Err(Error::ContradictoryHint("split".into()))
        );
    }

    #[test]
    fn hint_names_parse() {
        for h in ["auto", "split", "chordal", "interval", "unit-interval"] {
            assert_eq!(h.parse::<ClassHint>().unwrap().name(), h);
        }
    }
}
