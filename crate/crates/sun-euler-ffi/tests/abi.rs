//! Exercise the C surface through the exported extern functions.

use std::f64::consts::PI;

use sun_euler_ffi::*;

fn call_unitary(n: u32, alpha: &[f64]) -> (SunEulerStatus, Vec<f64>, Vec<f64>) {
    let dim = (n * n) as usize;
    let mut re = vec![0.0; dim];
    let mut im = vec![0.0; dim];
    let status = unsafe {
        sun_euler_unitary(n, alpha.as_ptr(), alpha.len(), re.as_mut_ptr(), im.as_mut_ptr())
    };
    (status, re, im)
}

#[test]
fn param_count_matches_dimension() {
    assert_eq!(sun_euler_param_count(2), 3);
    assert_eq!(sun_euler_param_count(9), 80);
    assert_eq!(sun_euler_param_count(1), 0);
}

#[test]
fn unitary_identity_round_trip() {
    let (status, re, im) = call_unitary(2, &[0.0, 0.0, 0.0]);
    assert_eq!(status, SunEulerStatus::Ok);
    assert_eq!(re, vec![1.0, 0.0, 0.0, 1.0]);
    assert!(im.iter().all(|&x| x == 0.0));
}

#[test]
fn unitary_rejects_bad_lengths_and_nulls() {
    let (status, _, _) = call_unitary(3, &[0.0; 3]);
    assert_eq!(status, SunEulerStatus::InvalidArgument);
    let status = unsafe {
        sun_euler_unitary(2, std::ptr::null(), 3, std::ptr::null_mut(), std::ptr::null_mut())
    };
    assert_eq!(status, SunEulerStatus::NullPointer);
    let mut out = [0.0];
    let status = unsafe { sun_euler_volume_marinov(1, out.as_mut_ptr()) };
    assert_eq!(status, SunEulerStatus::InvalidDimension);
    let _ = out;
}

#[test]
fn generator_entries_come_through() {
    let mut re = vec![0.0; 9];
    let mut im = vec![0.0; 9];
    let status = unsafe { sun_euler_generator(3, 5, re.as_mut_ptr(), im.as_mut_ptr()) };
    assert_eq!(status, SunEulerStatus::Ok);
    assert_eq!(im[2], -1.0); // (1,3) entry of λ5
    assert_eq!(im[6], 1.0); // (3,1) entry
    assert!(re.iter().all(|&x| x == 0.0));
    let status = unsafe { sun_euler_generator(3, 9, re.as_mut_ptr(), im.as_mut_ptr()) };
    assert_eq!(status, SunEulerStatus::InvalidArgument);
}

#[test]
fn volumes_agree_across_the_boundary() {
    let mut marinov = 0.0;
    let mut quad = 0.0;
    unsafe {
        assert_eq!(
            sun_euler_volume_marinov(4, &mut marinov),
            SunEulerStatus::Ok
        );
        assert_eq!(
            sun_euler_volume_quadrature(4, &mut quad),
            SunEulerStatus::Ok
        );
    }
    assert!((marinov - quad).abs() / marinov < 1e-12);
    assert!((marinov - 2.0f64.sqrt() * PI.powi(9) / 3.0).abs() / marinov < 1e-12);

    let (mut value, mut stderr) = (0.0, 0.0);
    let status = unsafe { sun_euler_volume_monte_carlo(2, 50_000, 3, 2, &mut value, &mut stderr) };
    assert_eq!(status, SunEulerStatus::Ok);
    assert!((value - 2.0 * PI * PI).abs() < 4.0 * stderr);

    let status = unsafe { sun_euler_volume_monte_carlo(2, 10, 3, 2, &mut value, &mut stderr) };
    assert_eq!(status, SunEulerStatus::InvalidArgument);
}

#[test]
fn ranges_and_theta_ranges_fill_buffers() {
    let count = sun_euler_param_count(3);
    let mut lo = vec![f64::NAN; count];
    let mut hi = vec![f64::NAN; count];
    let status = unsafe {
        sun_euler_ranges(
            3,
            SunEulerRangeMode::Quotient,
            lo.as_mut_ptr(),
            hi.as_mut_ptr(),
        )
    };
    assert_eq!(status, SunEulerStatus::Ok);
    assert!(lo.iter().all(|&x| x == 0.0));
    assert!((hi[7] - PI / 3.0f64.sqrt()).abs() < 1e-14);

    let mut tlo = vec![f64::NAN; 2];
    let mut thi = vec![f64::NAN; 2];
    let status = unsafe { sun_euler_theta_ranges(3, tlo.as_mut_ptr(), thi.as_mut_ptr()) };
    assert_eq!(status, SunEulerStatus::Ok);
    assert!((tlo[0] - PI / 4.0).abs() < 1e-14);
    assert!((thi[1] - PI / 2.0).abs() < 1e-14);
}

#[test]
fn density_reports_domain_errors() {
    let alpha = vec![0.0; 8];
    let mut re = vec![0.0; 9];
    let mut im = vec![0.0; 9];
    // θ below the restricted range.
    let theta = [0.05, 1.0];
    let status = unsafe {
        sun_euler_density(
            3,
            theta.as_ptr(),
            2,
            alpha.as_ptr(),
            8,
            re.as_mut_ptr(),
            im.as_mut_ptr(),
        )
    };
    assert_eq!(status, SunEulerStatus::DomainError);
    // Valid θ: ρ is the diagonal profile when α = 0.
    let theta = [1.2, 1.3];
    let status = unsafe {
        sun_euler_density(
            3,
            theta.as_ptr(),
            2,
            alpha.as_ptr(),
            8,
            re.as_mut_ptr(),
            im.as_mut_ptr(),
        )
    };
    assert_eq!(status, SunEulerStatus::Ok);
    let trace = re[0] + re[4] + re[8];
    assert!((trace - 1.0).abs() < 1e-12);
    assert!(im.iter().all(|&x| x.abs() < 1e-15));
}

#[test]
fn sampler_handle_lifecycle_and_determinism() {
    let a = sun_euler_sampler_new(3, 77, SunEulerRangeMode::Covering);
    let b = sun_euler_sampler_new(3, 77, SunEulerRangeMode::Covering);
    assert!(!a.is_null() && !b.is_null());
    let count = sun_euler_param_count(3);
    let mut angles_a = vec![0.0; count];
    let mut angles_b = vec![0.0; count];
    unsafe {
        assert_eq!(
            sun_euler_sampler_next_angles(a, angles_a.as_mut_ptr()),
            SunEulerStatus::Ok
        );
        assert_eq!(
            sun_euler_sampler_next_angles(b, angles_b.as_mut_ptr()),
            SunEulerStatus::Ok
        );
    }
    assert_eq!(angles_a, angles_b);

    let mut re = vec![0.0; 9];
    let mut im = vec![0.0; 9];
    unsafe {
        assert_eq!(
            sun_euler_sampler_next_unitary(a, re.as_mut_ptr(), im.as_mut_ptr()),
            SunEulerStatus::Ok
        );
        // Unitarity of the returned matrix: row norms are 1.
        for r in 0..3 {
            let norm: f64 = (0..3)
                .map(|c| re[r * 3 + c].powi(2) + im[r * 3 + c].powi(2))
                .sum();
            assert!((norm - 1.0).abs() < 1e-12);
        }
        assert_eq!(
            sun_euler_sampler_next_density(a, SunEulerThetaMode::Endpoints, re.as_mut_ptr(), im.as_mut_ptr()),
            SunEulerStatus::Ok
        );
        for (i, &x) in re.iter().enumerate() {
            let expected = if i % 4 == 0 { 1.0 / 3.0 } else { 0.0 };
            assert!((x - expected).abs() < 1e-12);
        }
        sun_euler_sampler_free(a);
        sun_euler_sampler_free(b);
        sun_euler_sampler_free(std::ptr::null_mut());
    }

    // Invalid dimension yields a null handle.
    assert!(sun_euler_sampler_new(1, 0, SunEulerRangeMode::Quotient).is_null());
}

#[test]
fn status_names_are_nul_terminated() {
    for status in [
        SunEulerStatus::Ok,
        SunEulerStatus::NullPointer,
        SunEulerStatus::InvalidDimension,
        SunEulerStatus::InvalidArgument,
        SunEulerStatus::DomainError,
        SunEulerStatus::InternalError,
    ] {
        let ptr = sun_euler_status_name(status);
        let text = unsafe { std::ffi::CStr::from_ptr(ptr) }.to_str().unwrap();
        assert!(!text.is_empty());
    }
}

#[test]
fn generated_header_exports_the_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/sun_euler.h"
    ))
    .expect("header generated at build time");
    for symbol in [
        "sun_euler_param_count",
        "sun_euler_generator",
        "sun_euler_unitary",
        "sun_euler_kernel",
        "sun_euler_volume_marinov",
        "sun_euler_volume_quadrature",
        "sun_euler_volume_monte_carlo",
        "sun_euler_ranges",
        "sun_euler_theta_ranges",
        "sun_euler_density",
        "sun_euler_sampler_new",
        "sun_euler_sampler_next_unitary",
        "sun_euler_sampler_free",
        "SunEulerStatus",
        "SunEulerSampler",
    ] {
        assert!(header.contains(symbol), "header is missing {symbol}");
    }
}
