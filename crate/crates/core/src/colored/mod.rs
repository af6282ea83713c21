//! Labelled forests, proper vertices, proper `k`-colorings and the
//! counting identities over them.

pub mod enumerate;
pub mod labelled;
pub mod partition;

pub use enumerate::{
    enumerate_colored, for_each_colored, labellings_with_proper_set, lemma_ccf_lhs, prop_cf_count,
    proper_set_labelling_counts, thm_cfs_count, ColoredFilter,
};
pub use labelled::{count_colorings, Color, ColoredLabelledForest, ColoredNode, LabelledForest};
pub use partition::{adjacency_swap, adjacent, partition_path, partitions, PartitionS};
