#pragma once

#include "cyclo/arith.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/document.hpp"
#include "cyclo/error.hpp"
#include "cyclo/hunter.hpp"
#include "cyclo/limits.hpp"
#include "cyclo/scan.hpp"
#include "cyclo/series.hpp"
#include "cyclo/strategies.hpp"
