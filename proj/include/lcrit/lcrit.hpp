#pragma once

#include <lcrit/arith.hpp>
#include <lcrit/complex.hpp>
#include <lcrit/gamma.hpp>
#include <lcrit/primes.hpp>
#include <lcrit/hecke_data.hpp>
#include <lcrit/euler.hpp>
#include <lcrit/gamma_fe.hpp>
#include <lcrit/afe.hpp>
#include <lcrit/weights.hpp>
#include <lcrit/rational_id.hpp>
#include <lcrit/builtin_tables.hpp>
#include <lcrit/congruence.hpp>
#include <lcrit/cases.hpp>
#include <lcrit/report.hpp>
