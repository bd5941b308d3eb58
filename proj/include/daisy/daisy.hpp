#pragma once

#include "daisy/bigint.hpp"
#include "daisy/census.hpp"
#include "daisy/family.hpp"
#include "daisy/io.hpp"
#include "daisy/poly.hpp"
#include "daisy/series.hpp"
#include "daisy/verify.hpp"
#include "daisy/word.hpp"
