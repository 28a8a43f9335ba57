#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# @Time    : 2026/9/6
# @Author  : .*?
# @File    : comparison_report
# @Software: PyCharm
from typing import List, Optional

from pydantic import BaseModel, Field

from domain.entity.learning_curve import LearningCurve


class ComparisonRow(BaseModel):
    step: int
    mean_eecl: float
    halfstd_eecl: float
    mean_base: float
    halfstd_base: float


class SeedOutcome(BaseModel):
    seed: int
    final_eecl: float
    final_base: float
    eecl_wins: bool
    novel_eecl: int = Field(description='Detector acceptances in the EECL arm')
    novel_base: int = Field(description='Passive monitor acceptances in the baseline arm')
    convergence_step_eecl: Optional[int] = None
    convergence_step_base: Optional[int] = None


class ComparisonSummary(BaseModel):
    env: str
    seeds: List[int]
    final_median_eecl: float
    final_median_base: float
    wins: int
    losses: int
    novel_total_eecl: int
    novel_total_base: int
    faster_convergence_seeds: int = Field(description='Seeds where EECL converged no later than the baseline')
    outcomes: List[SeedOutcome]


class ComparisonReport(BaseModel):
    rows: List[ComparisonRow]
    summary: ComparisonSummary
    eecl_curves: List[LearningCurve] = Field(description='One per seed, in seed order')
    base_curves: List[LearningCurve]
    csv_path: Optional[str] = None
    summary_path: Optional[str] = None
