use std::ffi::{CStr, CString};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::ptr;

use flagvar_ffi::*;

fn g2_p1() -> *mut FlagvarFlag {
    let mut flag = ptr::null_mut();
    let crossed = [1usize];
    let status = unsafe { flagvar_flag_new(b'G' as _, 2, crossed.as_ptr(), 1, &mut flag) };
    assert_eq!(status, FlagvarStatus::Ok);
    flag
}

fn last_error() -> String {
    let p = flagvar_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn dimension_and_omega() {
    let flag = g2_p1();
    unsafe {
        let mut dim = 0;
        assert_eq!(flagvar_flag_dimension(flag, &mut dim), FlagvarStatus::Ok);
        assert_eq!(dim, 5);
        let mut omega = [0i64; 4];
        let mut len = 0;
        assert_eq!(
            flagvar_flag_omega(flag, omega.as_mut_ptr(), 4, &mut len),
            FlagvarStatus::Ok
        );
        assert_eq!((len, &omega[..2]), (2, &[10, 5][..]));
        // short buffer still reports the full length
        assert_eq!(
            flagvar_flag_omega(flag, ptr::null_mut(), 0, &mut len),
            FlagvarStatus::Ok
        );
        assert_eq!(len, 2);
        let mut root = [0i32; 2];
        assert_eq!(
            flagvar_flag_noncompact_root(flag, 4, root.as_mut_ptr(), 2, &mut len),
            FlagvarStatus::Ok
        );
        assert_eq!(root, [3, 2]);
        assert_eq!(
            flagvar_flag_noncompact_root(flag, 5, root.as_mut_ptr(), 2, &mut len),
            FlagvarStatus::OutOfRange
        );
        flagvar_flag_free(flag);
    }
}

#[test]
fn enumerate_and_inspect() {
    let flag = g2_p1();
    unsafe {
        let mut list = ptr::null_mut();
        assert_eq!(
            flagvar_submodules_enumerate(flag, 0, &mut list),
            FlagvarStatus::Ok
        );
        let mut count = 0;
        assert_eq!(
            flagvar_submodules_count(list, &mut count),
            FlagvarStatus::Ok
        );
        assert_eq!(count, 4);
        let mut props = FlagvarProperties::default();
        assert_eq!(
            flagvar_submodule_properties(list, 2, &mut props),
            FlagvarStatus::Ok
        );
        assert!(props.semicanonical && props.nontrivial && !props.frobenius);
        assert_eq!((props.ratio_numer, props.ratio_denom), (4, 5));
        let mut w = [0i64; 2];
        let mut len = 0;
        assert_eq!(
            flagvar_submodule_weight(list, 2, w.as_mut_ptr(), 2, &mut len),
            FlagvarStatus::Ok
        );
        assert_eq!(w, [8, 4]);
        let mut members = [0usize; 5];
        assert_eq!(
            flagvar_submodule_members(list, 2, members.as_mut_ptr(), 5, &mut len),
            FlagvarStatus::Ok
        );
        assert_eq!(len, 3);
        assert_eq!(
            flagvar_submodule_properties(list, 4, &mut props),
            FlagvarStatus::OutOfRange
        );
        flagvar_submodules_free(list);
        flagvar_flag_free(flag);
    }
}

#[test]
fn json_descriptor_and_classify() {
    let desc = CString::new(r#"{"factors":[{"series":"B","rank":3}],"crossed":[[3]]}"#).unwrap();
    unsafe {
        let mut flag = ptr::null_mut();
        assert_eq!(
            flagvar_flag_from_json(desc.as_ptr(), &mut flag),
            FlagvarStatus::Ok
        );
        let mut s = ptr::null_mut();
        assert_eq!(
            flagvar_flag_classify_json(flag, 0, &mut s),
            FlagvarStatus::Ok
        );
        let v: serde_json::Value =
            serde_json::from_str(CStr::from_ptr(s).to_str().unwrap()).unwrap();
        assert_eq!(v["dimension"], 6);
        assert_eq!(v["submodule_count"], 3);
        flagvar_string_free(s);
        flagvar_flag_free(flag);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut flag = ptr::null_mut();
        let crossed = [4usize];
        assert_eq!(
            flagvar_flag_new(b'A' as _, 3, crossed.as_ptr(), 1, &mut flag),
            FlagvarStatus::InvalidFlag
        );
        assert!(flag.is_null());
        assert!(last_error().contains("node 4"));
        assert_eq!(
            flagvar_flag_new(b'Q' as _, 3, crossed.as_ptr(), 1, &mut flag),
            FlagvarStatus::InvalidFlag
        );
        assert!(last_error().contains("unknown series"));
        assert_eq!(
            flagvar_flag_new(b'A' as _, 3, ptr::null(), 0, &mut flag),
            FlagvarStatus::InvalidFlag
        );
        let bad = CString::new("{not json").unwrap();
        assert_eq!(
            flagvar_flag_from_json(bad.as_ptr(), &mut flag),
            FlagvarStatus::InvalidFlag
        );
        assert_eq!(
            flagvar_flag_from_json(ptr::null(), &mut flag),
            FlagvarStatus::InvalidArgument
        );
        let mut dim = 0;
        assert_eq!(
            flagvar_flag_dimension(ptr::null(), &mut dim),
            FlagvarStatus::InvalidArgument
        );

        let f = g2_p1();
        assert!(flagvar_last_error().is_null());
        let crossed = [1usize, 2, 3];
        let mut a3 = ptr::null_mut();
        assert_eq!(
            flagvar_flag_new(b'A' as _, 3, crossed.as_ptr(), 3, &mut a3),
            FlagvarStatus::Ok
        );
        let mut list = ptr::null_mut();
        assert_eq!(
            flagvar_submodules_enumerate(a3, 3, &mut list),
            FlagvarStatus::GuardOverflow
        );
        assert!(last_error().contains("guard"));
        flagvar_flag_free(a3);
        flagvar_flag_free(f);
        flagvar_flag_free(ptr::null_mut());
    }
}

fn target_dir() -> PathBuf {
    // tests run from target/<profile>/deps
    std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf()
}

#[test]
fn header_declares_api() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/flagvar.h"))
            .unwrap();
    for name in [
        "flagvar_flag_new",
        "flagvar_flag_from_json",
        "flagvar_submodules_enumerate",
        "flagvar_last_error",
        "typedef struct FlagvarFlag FlagvarFlag",
        "FLAGVAR_STATUS_GUARD_OVERFLOW = 3",
    ] {
        assert!(header.contains(name), "{name}");
    }
}

#[test]
fn c_program_links_static_library() {
    let lib = target_dir().join("libflagvar_ffi.a");
    if !lib.exists() {
        eprintln!("skipping: {} not built", lib.display());
        return;
    }
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let exe = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("flagvar_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let built = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status();
    match built {
        Ok(s) => assert!(s.success(), "C compile failed"),
        Err(e) => {
            eprintln!("skipping: no C compiler ({e})");
            return;
        }
    }
    let out = Command::new(&exe).output().unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "ok");
}
