//! Exact enumeration and generating functions for k-noncrossing,
//! σ-canonical RNA structures and their lv1/lv5 shapes.

pub mod count;
pub mod diagram;
pub mod enumerate;
pub mod poly;
pub mod series;
pub mod asymptotics;
pub mod verify;

pub use diagram::{parse_diagram, Diagram, DiagramError, ShapeLevel, Stack, StructureParams};
