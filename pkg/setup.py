"""
@author: Mathieu Tuli
@github: MathieuTuli
@email: tuli.mathieu@gmail.com
"""
from setuptools import setup, find_packages

setup(
    name='gammapred',
    version='0.1.0',
    packages=find_packages('src'),
    package_dir={'': 'src'},
    package_data={'gammapred': ['config.yaml', 'kinematics/profiles.txt']},
    include_package_data=True,
    zip_safe=False,
    url='https://github.com/MathieuTuli/',
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.21',
        'scipy>=1.7',
        'PyYAML>=5.4',
        'pydantic>=2.0',
        'jsons>=1.6',
        'pandas>=1.3',
        'tqdm>=4.60',
    ],
    extras_require={
        'test': ['pytest>=7.0', 'pytest-cov>=3.0', 'shapely>=2.0'],
    },
    entry_points={
        'console_scripts': ['gammapred=gammapred.__main__:main'],
    },
    # DO NOT do tests_require; just call pytest or python -m pytest.
    license='License :: Other/Proprietary License',
    author='Mathieu Tuli',
    author_email='tuli.mathieu@gmail.com',
    description='Heterogeneous traffic-agent motion prediction by ' +
    'constrained velocity-space optimization',
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: Other/Proprietary License',
        'Topic :: Scientific/Engineering',
        'Programming Language :: Python :: 3',
    ],
)
