#pragma once

#include <fatpoints/arrangements.hpp>
#include <fatpoints/config_io.hpp>
#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>
#include <fatpoints/geometry.hpp>
#include <fatpoints/hilbert.hpp>
#include <fatpoints/incidence.hpp>
#include <fatpoints/matrix.hpp>
#include <fatpoints/report_io.hpp>
#include <fatpoints/rng.hpp>
#include <fatpoints/verification.hpp>
#include <fatpoints/version.hpp>
