//! dB / linear conversions. Every conversion in the crate goes through here.

#[inline]
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

#[inline]
pub fn linear_to_db(linear: f64) -> f64 {
    10.0 * linear.log10()
}

/// dBm to milliwatts.
#[inline]
pub fn dbm_to_mw(dbm: f64) -> f64 {
    db_to_linear(dbm)
}

#[inline]
pub fn mw_to_dbm(mw: f64) -> f64 {
    linear_to_db(mw)
}

/// Bandwidth in Hz expressed in dB-Hz.
#[inline]
pub fn hz_to_db(hz: f64) -> f64 {
    linear_to_db(hz)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for db in [-174.0, -3.0, 0.0, 9.0, 49.0] {
            assert!((linear_to_db(db_to_linear(db)) - db).abs() < 1e-12);
        }
        assert!((db_to_linear(30.0) - 1000.0).abs() < 1e-9);
        assert!((hz_to_db(20e6) - 73.0103).abs() < 1e-4);
    }
}
