//! Points, grid cells and the downward coverage cone.
//!
//! The z axis is depth: z = 0 is the sea surface and z grows towards the
//! seabed at z = H.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn distance(&self, other: &Point3) -> f64 {
        let (dx, dy, dz) = (self.x - other.x, self.y - other.y, self.z - other.z);
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Integer lattice position of the AUV.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct GridPos {
    pub x: i32,
    pub y: i32,
    pub z: i32,
}

impl GridPos {
    pub const fn new(x: i32, y: i32, z: i32) -> Self {
        Self { x, y, z }
    }

    pub fn to_point(self) -> Point3 {
        Point3::new(self.x as f64, self.y as f64, self.z as f64)
    }
}

/// Axis-aligned box `[0,L]×[0,W]×[0,H]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cube {
    pub length: f64,
    pub width: f64,
    pub height: f64,
}

impl Cube {
    pub fn new(length: f64, width: f64, height: f64) -> Self {
        Self {
            length,
            width,
            height,
        }
    }

    pub fn volume(&self) -> f64 {
        self.length * self.width * self.height
    }

    pub fn contains(&self, p: &Point3) -> bool {
        (0.0..=self.length).contains(&p.x)
            && (0.0..=self.width).contains(&p.y)
            && (0.0..=self.height).contains(&p.z)
    }
}

/// Right circular cone opening downwards (+z) from `apex`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cone {
    pub apex: Point3,
    /// Full apex angle in degrees.
    pub apex_angle_deg: f64,
    /// Axial extent below the apex. `f64::INFINITY` for an unbounded cone.
    pub height: f64,
}

impl Cone {
    pub fn new(apex: Point3, apex_angle_deg: f64, height: f64) -> Self {
        Self {
            apex,
            apex_angle_deg,
            height,
        }
    }

    pub fn half_angle_tan(&self) -> f64 {
        (self.apex_angle_deg.to_radians() / 2.0).tan()
    }

    pub fn base_radius(&self) -> f64 {
        self.height * self.half_angle_tan()
    }

    /// Closed membership test; points on the lateral surface count as inside.
    pub fn contains(&self, p: &Point3) -> bool {
        let dz = p.z - self.apex.z;
        if dz < 0.0 || dz > self.height {
            return false;
        }
        let (dx, dy) = (p.x - self.apex.x, p.y - self.apex.y);
        let reach = dz * self.half_angle_tan();
        dx * dx + dy * dy <= reach * reach
    }
}
