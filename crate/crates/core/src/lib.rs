//! Finite quandles, their displacement groups and congruence lattices,
//! and a classification pipeline for latin quandles of size 16p.

pub mod conglat;
pub mod constructions;
pub mod grpmodel;
pub mod linfq;
pub mod permgrp;
pub mod pipeline;
pub mod quandle;
pub mod quiso;
pub mod util;
