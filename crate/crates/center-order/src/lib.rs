//! Exact barycentric evaluation of cataloged triangle centers and certified
//! decisions for four natural partial orders (isosceles, vertex, side, trace)
//! over families of triangles.

pub mod catalog;
pub mod decide;
pub mod exactnum;
pub mod families;
pub mod geom;
pub mod mpoly;
pub mod numeric;
pub mod ordergraph;
pub mod render;
