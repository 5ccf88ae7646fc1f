//! Graph-class recognition with checkable certificates.

mod chordal;
mod forbidden;
mod interval;
mod split;
mod unit_interval;

pub use chordal::{is_hole, recognize_chordal, Chordality};
pub use forbidden::{
    find_claw, find_net, has_long_hole, is_claw_net_free, is_weakly_chordal_desk,
    DEFAULT_WEAK_CHORDAL_GUARD,
};
pub use interval::{all_clique_orders, recognize_interval, CliqueOrder};
pub use split::{recognize_split, SplitPartition};
pub use unit_interval::{is_unit_interval_order, recognize_unit_interval};
