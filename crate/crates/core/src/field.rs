//! Binary field files for the Poisson driver.
//!
//! Layout, all little-endian: the magic `b"CYLF"`, three `u32` dimensions
//! (radial, theta, z), then `radial * theta * z` doubles in radial-fastest
//! order (`r`, then `theta`, then `z`).

use ndarray::Array3;
use std::io::{Read, Write};
use std::path::Path;

use crate::{Error, Result};

pub const MAGIC: &[u8; 4] = b"CYLF";

pub fn read_field(path: &Path) -> Result<Array3<f64>> {
    let mut file = std::fs::File::open(path)?;
    let mut bytes = Vec::new();
    file.read_to_end(&mut bytes)?;
    read_field_bytes(&bytes)
}

pub fn read_field_bytes(bytes: &[u8]) -> Result<Array3<f64>> {
    if bytes.len() < 16 || &bytes[..4] != MAGIC {
        return Err(Error::Format("missing CYLF magic".into()));
    }
    let dim = |i: usize| -> usize {
        u32::from_le_bytes(bytes[4 + 4 * i..8 + 4 * i].try_into().unwrap()) as usize
    };
    let (nr, nt, nz) = (dim(0), dim(1), dim(2));
    if nr == 0 || nt == 0 || nz == 0 {
        return Err(Error::Format(format!("zero dimension in header ({nr}, {nt}, {nz})")));
    }
    let count = nr
        .checked_mul(nt)
        .and_then(|v| v.checked_mul(nz))
        .ok_or_else(|| Error::Format("dimension overflow".into()))?;
    let payload = &bytes[16..];
    if payload.len() != count * 8 {
        return Err(Error::Format(format!(
            "expected {} data bytes for ({nr}, {nt}, {nz}), found {}",
            count * 8,
            payload.len()
        )));
    }
    let mut field = Array3::zeros((nr, nt, nz));
    let mut off = 0;
    for iz in 0..nz {
        for it in 0..nt {
            for ir in 0..nr {
                field[(ir, it, iz)] =
                    f64::from_le_bytes(payload[off..off + 8].try_into().unwrap());
                off += 8;
            }
        }
    }
    Ok(field)
}

pub fn write_field(path: &Path, field: &Array3<f64>) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_field_to(&mut out, field)
}

pub fn write_field_to<W: Write>(out: &mut W, field: &Array3<f64>) -> Result<()> {
    let (nr, nt, nz) = field.dim();
    out.write_all(MAGIC)?;
    for d in [nr, nt, nz] {
        out.write_all(&(d as u32).to_le_bytes())?;
    }
    for iz in 0..nz {
        for it in 0..nt {
            for ir in 0..nr {
                out.write_all(&field[(ir, it, iz)].to_le_bytes())?;
            }
        }
    }
    Ok(())
}
