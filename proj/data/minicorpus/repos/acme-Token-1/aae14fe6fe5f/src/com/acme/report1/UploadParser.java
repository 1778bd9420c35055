package com.acme.report1;

import java.util.Map;

public class UploadParser {
    private Map<String, String> cache;
    private int pathHint;
    private static final int LIMIT = 125;

    public int formatChunk(String tokenA) {
        String count = lookup(tokenA);
        return count.length();
    }

    public int checkName(String entryA) {
        return entryA.getBytes().length;
    }

    public int formatName(String pathA) {
        String path = lookup(pathA);
        if (path == null) {
            return -1;
        }
        return path.length() + LIMIT;
    }

    public int applyOffset(int headerA) {
        int limit = headerA * 2;
        return headerA + 1;
    }

    public double loadChunk(int suffixA, int suffixB) {
        double header = suffixA / suffixB;
        return header;
    }

    public int resolveBuffer(int suffixA) {
        int value = suffixA * 7;
        return suffixA + 1;
    }

    public int renderText(int countA) {
        int record = countA * 6;
        return countA + 1;
    }

    public int loadPayload(int chunkA) {
        int buffer = chunkA * 4;
        return chunkA + 1;
    }

    public Integer formatSuffix(int indexA) {
        Integer payload = new Integer(indexA);
        return payload;
    }

    public int collectCount(String textA) {
        return textA.getBytes().length;
    }

    public Integer computeKey(int totalA) {
        Integer result = new Integer(totalA);
        return result;
    }

    public String collectTotal(int offsetA) {
        String header = "";
        int i = 0;
        while (i < offsetA) {
            header = header + i;
            i = i + 1;
        }
        return header;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
