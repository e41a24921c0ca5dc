import setuptools

with open('README.rst', 'r', encoding='utf-8') as fh:
    long_description = fh.read()

with open('VERSION', 'r') as fh:
    version = fh.read().strip()

setuptools.setup(name='qconj',
                 version=version,
                 description='Exact verification of quantized conjugacy classes of GL(n) via parabolic Verma modules',
                 long_description=long_description,
                 long_description_content_type='text/x-rst',
                 package_dir={'': 'src'},
                 packages=setuptools.find_packages(where='src'),
                 python_requires='>=3.9',
                 install_requires=[
                     'sympy>=1.12',
                     'numpy',
                     'h5py>=2.10',
                     'pyyaml',
                     'tqdm',
                     'pytest'
                 ],
                 entry_points={
                     'console_scripts': ['qconj=qconj.cli:main']
                 }
                 )
