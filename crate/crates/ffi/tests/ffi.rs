use std::ffi::{c_char, CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use admpoisson_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn parse(text: &str) -> *mut AdmFile {
    let mut out = ptr::null_mut();
    let status = unsafe { adm_file_parse(cstr(text).as_ptr(), &mut out) };
    assert_eq!(status, AdmStatus::Ok);
    assert!(!out.is_null());
    out
}

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 512];
    let n = unsafe { adm_last_error(buf.as_mut_ptr(), buf.len()) };
    assert!(n > 0, "no error recorded");
    unsafe { CStr::from_ptr(buf.as_ptr()) }
        .to_string_lossy()
        .into_owned()
}

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_string_lossy().into_owned();
    unsafe { adm_string_free(s) };
    text
}

const NOT_ADM: &str = "field rational\ndim 2\nop star\nstar: e1 e1 = 1 e2\nstar: e2 e2 = 1 e1\n";
const ZERO_R: &str = "field gf 5\ndim 2\nop star\nstar: e1 e1 = 1 e1\ntensor r\n";

#[test]
fn check_reports_hold_and_fail() {
    let ok = parse(ZERO_R);
    let bad = parse(NOT_ADM);
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(
            adm_check(ok, cstr("adm-pybe").as_ptr(), &mut report),
            AdmStatus::Ok
        );
        assert_eq!(
            take_string(report),
            "OK adm-pybe (dim 2, 8 triples checked)"
        );
        assert_eq!(
            adm_check(bad, cstr("adm-poisson").as_ptr(), &mut report),
            AdmStatus::Fails
        );
        assert!(take_string(report).starts_with("FAIL c1 at (1,1,2)"));
        assert_eq!(
            adm_check(bad, cstr("adm-poisson").as_ptr(), ptr::null_mut()),
            AdmStatus::Fails
        );
        assert_eq!(
            adm_last_error(ptr::null_mut(), 0),
            0,
            "a failing predicate is not an error"
        );
        adm_file_free(ok);
        adm_file_free(bad);
    }
}

#[test]
fn error_codes_and_messages() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            adm_file_parse(cstr("field rational\nop star\n").as_ptr(), &mut out),
            AdmStatus::ParseError
        );
        assert!(out.is_null());
        assert!(last_error().contains("line 2"));
        assert_eq!(
            adm_file_parse(ptr::null(), &mut out),
            AdmStatus::NullPointer
        );
        assert_eq!(
            adm_file_parse(cstr("dim 1").as_ptr(), ptr::null_mut()),
            AdmStatus::NullPointer
        );
        let bytes = [0xffu8 as c_char, 0];
        assert_eq!(
            adm_file_parse(bytes.as_ptr(), &mut out),
            AdmStatus::InvalidUtf8
        );

        let f = parse(ZERO_R);
        assert_eq!(
            adm_check(f, cstr("no-such").as_ptr(), ptr::null_mut()),
            AdmStatus::UnknownName
        );
        assert!(last_error().contains("no-such"));
        assert_eq!(
            adm_check(f, cstr("bialgebra").as_ptr(), ptr::null_mut()),
            AdmStatus::InvalidInput
        );
        assert!(last_error().contains("alpha"));
        assert_eq!(
            adm_check(ptr::null(), cstr("rep").as_ptr(), ptr::null_mut()),
            AdmStatus::NullPointer
        );
        assert_eq!(
            adm_build(f, cstr("subadjacent").as_ptr(), &mut out),
            AdmStatus::InvalidInput
        );
        assert!(out.is_null());
        adm_file_free(f);
        adm_file_free(ptr::null_mut());
        adm_string_free(ptr::null_mut());
    }
}

#[test]
fn truncated_error_copy() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            adm_file_parse(cstr("field gf 4\ndim 1\n").as_ptr(), &mut out),
            AdmStatus::ParseError
        );
        let mut small = [1 as c_char; 6];
        let full = adm_last_error(small.as_mut_ptr(), small.len());
        assert!(full > 5);
        assert_eq!(small[5], 0);
        assert_eq!(CStr::from_ptr(small.as_ptr()).to_bytes().len(), 5);
    }
}

#[test]
fn build_print_and_dim() {
    let f = parse("field rational\ndim 2\nop star\nstar: e1 e2 = 1 e2\nstar: e2 e1 = -1 e2\n");
    let mut pol = ptr::null_mut();
    let mut back = ptr::null_mut();
    unsafe {
        assert_eq!(
            adm_build(f, cstr("polarize").as_ptr(), &mut pol),
            AdmStatus::Ok
        );
        assert_eq!(
            adm_build(pol, cstr("depolarize").as_ptr(), &mut back),
            AdmStatus::Ok
        );
        assert_eq!(
            take_string(adm_file_print(back)),
            take_string(adm_file_print(f))
        );
        assert_eq!(adm_file_dim(pol), 2);
        assert_eq!(adm_file_dim(ptr::null()), 0);
        assert!(adm_file_print(ptr::null()).is_null());
        let mut adj = ptr::null_mut();
        assert_eq!(
            adm_build(f, cstr("adjoint-rep").as_ptr(), &mut adj),
            AdmStatus::Ok
        );
        assert_eq!(
            adm_check(adj, cstr("rep").as_ptr(), ptr::null_mut()),
            AdmStatus::Ok
        );
        for h in [f, pol, back, adj] {
            adm_file_free(h);
        }
    }
}

#[test]
fn search_through_the_abi() {
    let mut out = ptr::null_mut();
    unsafe {
        assert_eq!(
            adm_search(
                cstr("adm_poisson").as_ptr(),
                1,
                5,
                ptr::null(),
                0,
                0,
                0,
                &mut out
            ),
            AdmStatus::Ok
        );
        let text = take_string(out);
        assert_eq!(text.matches("# --- instance").count(), 5);
        assert!(text.ends_with("# 5 instances, 5 candidates, exhaustive\n"));
        assert_eq!(
            adm_search(
                cstr("pre_adm_poisson").as_ptr(),
                2,
                5,
                ptr::null(),
                0,
                0,
                0,
                &mut out
            ),
            AdmStatus::InvalidInput
        );
        assert!(last_error().contains("sample"));
        assert_eq!(
            adm_search(
                cstr("pre_adm_poisson").as_ptr(),
                2,
                5,
                ptr::null(),
                3,
                50_000,
                9,
                &mut out
            ),
            AdmStatus::Ok
        );
        assert_eq!(take_string(out).matches("# --- instance").count(), 3);
        let base = parse("field gf 5\ndim 2\nop star\nstar: e1 e2 = 1 e2\nstar: e2 e1 = -1 e2\n");
        assert_eq!(
            adm_search(
                cstr("adm_pybe_solution").as_ptr(),
                0,
                5,
                base,
                4,
                0,
                0,
                &mut out
            ),
            AdmStatus::Ok
        );
        assert_eq!(take_string(out).matches("# --- instance").count(), 4);
        assert_eq!(
            adm_search(cstr("nope").as_ptr(), 1, 5, ptr::null(), 0, 0, 0, &mut out),
            AdmStatus::UnknownName
        );
        adm_file_free(base);
    }
}

fn target_dir() -> PathBuf {
    // <target>/<profile>/deps/<test binary>
    std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf()
}

#[test]
fn c_program_links_against_the_static_library() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = target_dir().join("libadmpoisson_ffi.a");
    let Ok(cc) = which_cc() else {
        eprintln!("no C compiler found; skipping");
        return;
    };
    assert!(
        lib.exists(),
        "static library not built at {}",
        lib.display()
    );
    let exe = tempfile_path("adm_smoke");
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success(), "C compile failed");
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(
        stdout.starts_with("OK adm-poisson (dim 2, 8 triples checked)\n"),
        "{stdout}"
    );
    assert!(stdout.contains("characteristic 3"), "{stdout}");
    let _ = std::fs::remove_file(exe);
}

fn which_cc() -> Result<String, ()> {
    for cc in ["cc", "gcc", "clang"] {
        if Command::new(cc)
            .arg("--version")
            .output()
            .is_ok_and(|o| o.status.success())
        {
            return Ok(cc.to_string());
        }
    }
    Err(())
}

fn tempfile_path(stem: &str) -> PathBuf {
    std::env::temp_dir().join(format!("{stem}_{}", std::process::id()))
}

#[test]
fn header_declares_every_entry_point() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/admpoisson.h"))
            .unwrap();
    for name in [
        "adm_last_error",
        "adm_file_parse",
        "adm_file_free",
        "adm_file_dim",
        "adm_file_print",
        "adm_string_free",
        "adm_check",
        "adm_build",
        "adm_search",
        "ADM_STATUS_FAILS = 1",
        "typedef struct AdmFile AdmFile",
    ] {
        assert!(header.contains(name), "{name}");
    }
}
